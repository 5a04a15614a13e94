#include "vseval/color_features.hpp"

#include <cmath>
#include <string>

#include "vseval/errors.hpp"

namespace vseval {

int quantize_hsv(double h, double s, double v) {
  if (!(h >= 0.0 && h < 360.0) || !(s >= 0.0 && s <= 1.0) || !(v >= 0.0 && v <= 1.0)) {
    throw EvalError(ErrorCode::OutOfRange,
                    "hsv (" + std::to_string(h) + ", " + std::to_string(s) + ", " +
                        std::to_string(v) + ") outside [0,360) x [0,1] x [0,1]");
  }
  const int hi = std::min(static_cast<int>(h / 360.0 * kHueBins), kHueBins - 1);
  const int si = std::min(static_cast<int>(s * kSatBins), kSatBins - 1);
  const int vi = std::min(static_cast<int>(v * kValBins), kValBins - 1);
  return (hi * kSatBins + si) * kValBins + vi;
}

ColorHistogram color_histogram(const HsvImage& img) {
  if (img.pixels.empty()) {
    throw EvalError(ErrorCode::EmptyImage, "cannot build a histogram of an empty image");
  }
  ColorHistogram hist;
  for (const HsvPixel& px : img.pixels) {
    hist.bins[quantize_hsv(px.h, px.s, px.v)] += 1.0;
  }
  const double total = static_cast<double>(img.pixels.size());
  for (double& bin : hist.bins) bin /= total;
  return hist;
}

}  // namespace vseval
