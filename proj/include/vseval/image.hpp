#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vseval {

/// Decoded keyframe raster, 8-bit RGB, row-major.
struct FrameImage {
  std::uint64_t frame_id = 0;
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // width*height*3, R,G,B per pixel
  std::string source_path;

  bool valid() const {
    return width >= 1 && height >= 1 &&
           pixels.size() == static_cast<std::size_t>(width) * height * 3;
  }
};

struct HsvPixel {
  double h = 0.0;  // degrees, [0,360)
  double s = 0.0;  // [0,1]
  double v = 0.0;  // [0,1]
};

struct HsvImage {
  int width = 0;
  int height = 0;
  std::vector<HsvPixel> pixels;  // row-major

  std::size_t pixel_count() const { return pixels.size(); }
};

/// Hexcone conversion of one 8-bit RGB triple. Achromatic pixels get H = 0.
HsvPixel rgb_to_hsv_pixel(std::uint8_t r, std::uint8_t g, std::uint8_t b);

HsvImage rgb_to_hsv(const FrameImage& img);

}  // namespace vseval
