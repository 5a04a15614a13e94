#include "vseval/texture_features.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vseval/errors.hpp"

namespace vseval {

namespace {

// Fractional overlap of [a0,a1) with the unit-length cell [i,i+1).
inline double overlap(double a0, double a1, int i) {
  const double lo = std::max(a0, static_cast<double>(i));
  const double hi = std::min(a1, static_cast<double>(i + 1));
  return hi > lo ? hi - lo : 0.0;
}

}  // namespace

HsvImage resize_to_64(const HsvImage& img) {
  if (img.pixels.empty() || img.width < 1 || img.height < 1) {
    throw EvalError(ErrorCode::EmptyImage, "cannot resize an empty image");
  }
  HsvImage out;
  out.width = kTextureSide;
  out.height = kTextureSide;
  out.pixels.resize(static_cast<std::size_t>(kTextureSide) * kTextureSide);

  const double sx = img.width / static_cast<double>(kTextureSide);
  const double sy = img.height / static_cast<double>(kTextureSide);
  for (int oy = 0; oy < kTextureSide; ++oy) {
    const double y0 = oy * sy;
    const double y1 = (oy + 1) * sy;
    const int iy0 = static_cast<int>(y0);
    const int iy1 = std::min(img.height - 1, static_cast<int>(std::ceil(y1)) - 1);
    for (int ox = 0; ox < kTextureSide; ++ox) {
      const double x0 = ox * sx;
      const double x1 = (ox + 1) * sx;
      const int ix0 = static_cast<int>(x0);
      const int ix1 = std::min(img.width - 1, static_cast<int>(std::ceil(x1)) - 1);

      double h = 0.0, s = 0.0, v = 0.0, area = 0.0;
      for (int iy = iy0; iy <= iy1; ++iy) {
        const double wy = overlap(y0, y1, iy);
        if (wy <= 0.0) continue;
        const HsvPixel* row = &img.pixels[static_cast<std::size_t>(iy) * img.width];
        for (int ix = ix0; ix <= ix1; ++ix) {
          const double w = wy * overlap(x0, x1, ix);
          if (w <= 0.0) continue;
          h += row[ix].h * w;
          s += row[ix].s * w;
          v += row[ix].v * w;
          area += w;
        }
      }
      HsvPixel& dst = out.pixels[static_cast<std::size_t>(oy) * kTextureSide + ox];
      dst.h = h / area;
      dst.s = s / area;
      dst.v = v / area;
    }
  }
  return out;
}

std::vector<double> haar_approx(std::span<const double> grid, int size, int levels) {
  if (size < 1 || levels < 0 ||
      grid.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    throw EvalError(ErrorCode::WrongDimensions,
                    "grid is not " + std::to_string(size) + "x" + std::to_string(size));
  }
  if (size % (1 << levels) != 0) {
    throw EvalError(ErrorCode::WrongDimensions,
                    std::to_string(size) + " not divisible by 2^" + std::to_string(levels));
  }

  std::vector<double> buf(grid.begin(), grid.end());
  std::vector<double> line(static_cast<std::size_t>(size));
  int cur = size;
  for (int level = 0; level < levels; ++level) {
    const int half = cur / 2;
    // rows: averages into the left half, details into the right half
    for (int r = 0; r < cur; ++r) {
      double* row = &buf[static_cast<std::size_t>(r) * size];
      for (int k = 0; k < half; ++k) {
        const double a = row[2 * k];
        const double b = row[2 * k + 1];
        line[k] = (a + b) / 2.0;
        line[half + k] = (a - b) / 2.0;
      }
      std::copy_n(line.begin(), cur, row);
    }
    // columns
    for (int c = 0; c < cur; ++c) {
      for (int k = 0; k < half; ++k) {
        const double a = buf[static_cast<std::size_t>(2 * k) * size + c];
        const double b = buf[static_cast<std::size_t>(2 * k + 1) * size + c];
        line[k] = (a + b) / 2.0;
        line[half + k] = (a - b) / 2.0;
      }
      for (int k = 0; k < cur; ++k) buf[static_cast<std::size_t>(k) * size + c] = line[k];
    }
    cur = half;
  }

  std::vector<double> approx(static_cast<std::size_t>(cur) * cur);
  for (int r = 0; r < cur; ++r) {
    for (int c = 0; c < cur; ++c) {
      approx[static_cast<std::size_t>(r) * cur + c] = buf[static_cast<std::size_t>(r) * size + c];
    }
  }
  return approx;
}

TextureDescriptor texture_descriptor(const HsvImage& img64, bool* was_all_black) {
  if (img64.width != kTextureSide || img64.height != kTextureSide ||
      img64.pixels.size() != static_cast<std::size_t>(kTextureSide) * kTextureSide) {
    throw EvalError(ErrorCode::WrongDimensions, "texture input must be 64x64");
  }
  if (was_all_black) *was_all_black = false;

  const std::size_t n = img64.pixels.size();
  std::vector<double> channel(n);
  TextureDescriptor desc;
  const int block = kTextureSide >> kHaarLevels;  // 8
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      const HsvPixel& px = img64.pixels[i];
      channel[i] = (c == 0) ? px.h / 360.0 : (c == 1) ? px.s : px.v;
    }
    const std::vector<double> approx = haar_approx(channel, kTextureSide, kHaarLevels);
    std::copy(approx.begin(), approx.end(),
              desc.values.begin() + static_cast<std::size_t>(c) * block * block);
  }

  double total = 0.0;
  for (double value : desc.values) total += value;
  if (total <= 0.0) {
    // identically black frame: fall back to the uniform vector so the
    // descriptor stays a valid distribution
    if (was_all_black) *was_all_black = true;
    desc.values.fill(1.0 / kTextureValues);
    return desc;
  }
  for (double& value : desc.values) value /= total;
  return desc;
}

}  // namespace vseval
