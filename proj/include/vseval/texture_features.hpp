#pragma once

#include <array>
#include <span>
#include <vector>

#include "vseval/image.hpp"

namespace vseval {

inline constexpr int kTextureSide = 64;   // frames are reduced to 64x64 first
inline constexpr int kHaarLevels = 3;     // 64x64 -> 8x8 approximation
inline constexpr int kTextureValues = 3 * 8 * 8;  // 192

/// Level-3 Haar approximation coefficients of the H,S,V channels,
/// concatenated in that order and L1-normalized.
struct TextureDescriptor {
  std::array<double, kTextureValues> values{};
};

/// Box-filter downscale/upscale to 64x64. Each output pixel is the
/// area-weighted average of the source region it covers; H is averaged
/// as a plain scalar.
HsvImage resize_to_64(const HsvImage& img);

/// 2-D Haar analysis with the averaging convention (approximation (a+b)/2,
/// detail (a-b)/2), applied `levels` times; detail subbands are computed and
/// discarded. For inputs in [0,1] the result stays in [0,1], and the level-3
/// approximation of a 64x64 grid equals its 8x8 block means.
/// `grid` is size x size row-major; size must be divisible by 2^levels.
std::vector<double> haar_approx(std::span<const double> grid, int size, int levels);

/// Descriptor of an exactly-64x64 HSV image. H is prescaled by 1/360 so all
/// channels are commensurate. A frame whose channels are identically zero
/// (pure black) yields the uniform vector; `*was_all_black` reports that case
/// so callers can log it.
TextureDescriptor texture_descriptor(const HsvImage& img64, bool* was_all_black = nullptr);

}  // namespace vseval
