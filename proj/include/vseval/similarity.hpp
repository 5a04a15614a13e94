#pragma once

#include <span>
#include <string>

#include "vseval/color_features.hpp"
#include "vseval/texture_features.hpp"

namespace vseval {

/// Result of the Bhattacharyya coefficient; 1 for identical distributions,
/// 0 for disjoint supports.
using SimilarityScore = double;

enum class MatchMode {
  color_and_texture,  // default: matched only if both channels agree
  color_only,
  texture_only,
  color_or_texture,
};

const char* match_mode_name(MatchMode mode);
MatchMode match_mode_from_name(const std::string& name);

struct EvalConfig {
  double color_threshold = 0.97;
  double texture_threshold = 0.97;
  MatchMode match_mode = MatchMode::color_and_texture;

  void validate() const;  // thresholds must lie in (0,1]
};

/// Sum over i of sqrt(p[i]*q[i]) for two same-length distributions whose
/// entries are nonnegative and sum to 1 within 1e-6. Clamped to [0,1].
SimilarityScore bhattacharyya(std::span<const double> p, std::span<const double> q);

SimilarityScore bhattacharyya(const ColorHistogram& a, const ColorHistogram& b);
SimilarityScore bhattacharyya(const TextureDescriptor& a, const TextureDescriptor& b);

/// True iff the color score strictly exceeds cfg.color_threshold.
bool is_color_matched(const ColorHistogram& a, const ColorHistogram& b, const EvalConfig& cfg);

/// True iff the texture score strictly exceeds cfg.texture_threshold.
bool is_texture_matched(const TextureDescriptor& a, const TextureDescriptor& b,
                        const EvalConfig& cfg);

}  // namespace vseval
