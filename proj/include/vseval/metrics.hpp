#pragma once

#include <map>
#include <string>
#include <vector>

#include "vseval/matching.hpp"

namespace vseval {

struct PairScores {
  std::string video_id;
  std::string auto_label;
  std::string user_label;
  std::size_t n_auto = 0;
  std::size_t n_user = 0;
  std::size_t n_matched = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

enum class AggregationMode {
  per_video,  // mean F per video, then mean over videos
  flat,       // mean F over all pairs
};

const char* aggregation_mode_name(AggregationMode mode);
AggregationMode aggregation_mode_from_name(const std::string& name);

struct EvaluationReport {
  std::vector<PairScores> pairs;
  std::map<std::string, double> per_video_mean_f;
  double overall_mean_f = 0.0;
  EvalConfig config_echo;
  AggregationMode aggregation = AggregationMode::per_video;
};

/// Harmonic mean of precision and recall; 0 when both are 0.
double f_measure(double precision, double recall);

PairScores pair_scores(const MatchOutcome& outcome, const std::string& video_id,
                       const std::string& auto_label, const std::string& user_label);

/// Per-video means are always reported; the overall mean follows `mode`.
EvaluationReport aggregate(std::vector<PairScores> pairs, const EvalConfig& cfg,
                           AggregationMode mode = AggregationMode::per_video);

}  // namespace vseval
