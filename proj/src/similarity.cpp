#include "vseval/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vseval/errors.hpp"

namespace vseval {

namespace {
constexpr double kNormalizationTolerance = 1e-6;
}

const char* match_mode_name(MatchMode mode) {
  switch (mode) {
    case MatchMode::color_and_texture: return "color_and_texture";
    case MatchMode::color_only: return "color_only";
    case MatchMode::texture_only: return "texture_only";
    case MatchMode::color_or_texture: return "color_or_texture";
  }
  return "unknown";
}

MatchMode match_mode_from_name(const std::string& name) {
  if (name == "color_and_texture") return MatchMode::color_and_texture;
  if (name == "color_only") return MatchMode::color_only;
  if (name == "texture_only") return MatchMode::texture_only;
  if (name == "color_or_texture") return MatchMode::color_or_texture;
  throw EvalError(ErrorCode::InvalidConfig, "unknown match mode '" + name + "'");
}

void EvalConfig::validate() const {
  if (!(color_threshold > 0.0 && color_threshold <= 1.0)) {
    throw EvalError(ErrorCode::InvalidConfig,
                    "color threshold " + std::to_string(color_threshold) + " outside (0,1]");
  }
  if (!(texture_threshold > 0.0 && texture_threshold <= 1.0)) {
    throw EvalError(ErrorCode::InvalidConfig,
                    "texture threshold " + std::to_string(texture_threshold) + " outside (0,1]");
  }
}

SimilarityScore bhattacharyya(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size() || p.empty()) {
    throw EvalError(ErrorCode::LengthMismatch,
                    "distributions of size " + std::to_string(p.size()) + " and " +
                        std::to_string(q.size()));
  }
  double sum_p = 0.0;
  double sum_q = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0 || q[i] < 0.0) {
      throw EvalError(ErrorCode::NonNormalizedInput, "negative distribution entry");
    }
    sum_p += p[i];
    sum_q += q[i];
  }
  if (std::abs(sum_p - 1.0) > kNormalizationTolerance ||
      std::abs(sum_q - 1.0) > kNormalizationTolerance) {
    throw EvalError(ErrorCode::NonNormalizedInput,
                    "distribution sums " + std::to_string(sum_p) + ", " + std::to_string(sum_q));
  }
  double score = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    score += std::sqrt(p[i] * q[i]);
  }
  return std::clamp(score, 0.0, 1.0);
}

SimilarityScore bhattacharyya(const ColorHistogram& a, const ColorHistogram& b) {
  return bhattacharyya(std::span<const double>(a.bins), std::span<const double>(b.bins));
}

SimilarityScore bhattacharyya(const TextureDescriptor& a, const TextureDescriptor& b) {
  return bhattacharyya(std::span<const double>(a.values), std::span<const double>(b.values));
}

bool is_color_matched(const ColorHistogram& a, const ColorHistogram& b, const EvalConfig& cfg) {
  return bhattacharyya(a, b) > cfg.color_threshold;
}

bool is_texture_matched(const TextureDescriptor& a, const TextureDescriptor& b,
                        const EvalConfig& cfg) {
  return bhattacharyya(a, b) > cfg.texture_threshold;
}

}  // namespace vseval
