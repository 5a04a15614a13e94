#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vseval/similarity.hpp"

namespace vseval {

enum class SummaryKind { automatic, user };

struct FrameFeatures {
  std::uint64_t frame_id = 0;
  ColorHistogram color;
  TextureDescriptor texture;
};

/// Per-frame features of one summary. Frames are ordered by frame_id
/// ascending and frame_ids are unique within the set.
struct SummarySet {
  std::string video_id;
  SummaryKind kind = SummaryKind::automatic;
  std::string label;
  std::vector<FrameFeatures> frames;
};

struct MatchedPair {
  std::uint64_t auto_frame_id = 0;
  std::uint64_t user_frame_id = 0;
  SimilarityScore color_score = 0.0;
  SimilarityScore texture_score = 0.0;
};

struct MatchOutcome {
  std::vector<MatchedPair> pairs;
  std::size_t n_auto = 0;
  std::size_t n_user = 0;
  std::size_t n_matched = 0;  // == pairs.size()
};

/// Greedy frame matching with consumption: auto frames are visited in
/// frame_id order; each takes the first remaining user frame (also in
/// frame_id order) that satisfies cfg.match_mode, and that user frame is
/// removed from further consideration. Stops early once the user list is
/// exhausted. Scores are recorded for matched pairs only.
MatchOutcome match_summaries(const SummarySet& auto_set, const SummarySet& user_set,
                             const EvalConfig& cfg);

}  // namespace vseval
