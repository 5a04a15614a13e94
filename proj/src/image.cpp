#include "vseval/image.hpp"

#include <algorithm>
#include <cmath>

#include "vseval/errors.hpp"

namespace vseval {

HsvPixel rgb_to_hsv_pixel(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
  const double r = r8 / 255.0;
  const double g = g8 / 255.0;
  const double b = b8 / 255.0;
  const double v = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double delta = v - mn;

  HsvPixel out;
  out.v = v;
  out.s = (v == 0.0) ? 0.0 : delta / v;
  if (delta == 0.0) {
    out.h = 0.0;  // hue undefined for achromatic pixels; pinned for determinism
    return out;
  }
  double h;
  if (v == r) {
    h = 60.0 * std::fmod((g - b) / delta, 6.0);
    if (h < 0.0) h += 360.0;
  } else if (v == g) {
    h = 60.0 * ((b - r) / delta + 2.0);
  } else {
    h = 60.0 * ((r - g) / delta + 4.0);
  }
  if (h >= 360.0) h = 0.0;
  out.h = h;
  return out;
}

HsvImage rgb_to_hsv(const FrameImage& img) {
  if (!img.valid()) {
    throw EvalError(ErrorCode::WrongDimensions,
                    "invalid frame image from " + img.source_path);
  }
  HsvImage out;
  out.width = img.width;
  out.height = img.height;
  out.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
  const std::uint8_t* p = img.pixels.data();
  for (std::size_t i = 0; i < out.pixels.size(); ++i, p += 3) {
    out.pixels[i] = rgb_to_hsv_pixel(p[0], p[1], p[2]);
  }
  return out;
}

}  // namespace vseval
