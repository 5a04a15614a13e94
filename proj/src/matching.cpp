#include "vseval/matching.hpp"

#include <vector>

#include "vseval/errors.hpp"

namespace vseval {

namespace {

// Evaluates cfg.match_mode for one candidate pair. Scores are computed
// lazily; on a match both are filled in for the record.
bool pair_matches(const FrameFeatures& a, const FrameFeatures& u, const EvalConfig& cfg,
                  double* color_score, double* texture_score) {
  switch (cfg.match_mode) {
    case MatchMode::color_and_texture: {
      const double cs = bhattacharyya(a.color, u.color);
      if (!(cs > cfg.color_threshold)) return false;
      const double ts = bhattacharyya(a.texture, u.texture);
      if (!(ts > cfg.texture_threshold)) return false;
      *color_score = cs;
      *texture_score = ts;
      return true;
    }
    case MatchMode::color_only: {
      const double cs = bhattacharyya(a.color, u.color);
      if (!(cs > cfg.color_threshold)) return false;
      *color_score = cs;
      *texture_score = bhattacharyya(a.texture, u.texture);
      return true;
    }
    case MatchMode::texture_only: {
      const double ts = bhattacharyya(a.texture, u.texture);
      if (!(ts > cfg.texture_threshold)) return false;
      *texture_score = ts;
      *color_score = bhattacharyya(a.color, u.color);
      return true;
    }
    case MatchMode::color_or_texture: {
      const double cs = bhattacharyya(a.color, u.color);
      const double ts = bhattacharyya(a.texture, u.texture);
      if (!(cs > cfg.color_threshold) && !(ts > cfg.texture_threshold)) return false;
      *color_score = cs;
      *texture_score = ts;
      return true;
    }
  }
  return false;
}

}  // namespace

MatchOutcome match_summaries(const SummarySet& auto_set, const SummarySet& user_set,
                             const EvalConfig& cfg) {
  if (auto_set.frames.empty()) {
    throw EvalError(ErrorCode::EmptySummary, "automatic summary '" + auto_set.label + "' is empty");
  }
  if (user_set.frames.empty()) {
    throw EvalError(ErrorCode::EmptySummary, "user summary '" + user_set.label + "' is empty");
  }
  cfg.validate();

  MatchOutcome out;
  out.n_auto = auto_set.frames.size();
  out.n_user = user_set.frames.size();

  std::vector<bool> consumed(user_set.frames.size(), false);
  std::size_t remaining = user_set.frames.size();
  for (const FrameFeatures& auto_frame : auto_set.frames) {
    if (remaining == 0) break;  // user summary exhausted
    for (std::size_t j = 0; j < user_set.frames.size(); ++j) {
      if (consumed[j]) continue;
      const FrameFeatures& user_frame = user_set.frames[j];
      double color_score = 0.0;
      double texture_score = 0.0;
      if (!pair_matches(auto_frame, user_frame, cfg, &color_score, &texture_score)) continue;
      consumed[j] = true;
      --remaining;
      out.pairs.push_back({auto_frame.frame_id, user_frame.frame_id, color_score, texture_score});
      break;
    }
  }
  out.n_matched = out.pairs.size();
  return out;
}

}  // namespace vseval
