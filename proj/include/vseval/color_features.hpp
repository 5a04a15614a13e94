#pragma once

#include <array>

#include "vseval/image.hpp"

namespace vseval {

inline constexpr int kHueBins = 32;
inline constexpr int kSatBins = 4;
inline constexpr int kValBins = 2;
inline constexpr int kColorBins = kHueBins * kSatBins * kValBins;  // 256

/// Joint HSV color histogram, L1-normalized to a probability distribution.
struct ColorHistogram {
  std::array<double, kColorBins> bins{};
};

/// Bin index for one HSV triple. Layout is H-major: hi*8 + si*2 + vi,
/// with the upper edges (h -> 360, s = 1, v = 1) clamped into the top bin.
/// Inputs outside [0,360) x [0,1] x [0,1] are rejected.
int quantize_hsv(double h, double s, double v);

ColorHistogram color_histogram(const HsvImage& img);

}  // namespace vseval
