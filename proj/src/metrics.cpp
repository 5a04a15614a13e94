#include "vseval/metrics.hpp"

#include <map>
#include <utility>

#include "vseval/errors.hpp"

namespace vseval {

const char* aggregation_mode_name(AggregationMode mode) {
  return mode == AggregationMode::per_video ? "per-video" : "flat";
}

AggregationMode aggregation_mode_from_name(const std::string& name) {
  if (name == "per-video") return AggregationMode::per_video;
  if (name == "flat") return AggregationMode::flat;
  throw EvalError(ErrorCode::InvalidConfig, "unknown aggregation mode '" + name + "'");
}

double f_measure(double precision, double recall) {
  const double denom = precision + recall;
  if (denom <= 0.0) return 0.0;
  return 2.0 * precision * recall / denom;
}

PairScores pair_scores(const MatchOutcome& outcome, const std::string& video_id,
                       const std::string& auto_label, const std::string& user_label) {
  if (outcome.n_auto == 0 || outcome.n_user == 0) {
    throw EvalError(ErrorCode::ZeroDenominator, "empty summary in pair " + video_id + "/" +
                                                    auto_label + "/" + user_label);
  }
  PairScores scores;
  scores.video_id = video_id;
  scores.auto_label = auto_label;
  scores.user_label = user_label;
  scores.n_auto = outcome.n_auto;
  scores.n_user = outcome.n_user;
  scores.n_matched = outcome.n_matched;
  scores.precision = static_cast<double>(outcome.n_matched) / static_cast<double>(outcome.n_auto);
  scores.recall = static_cast<double>(outcome.n_matched) / static_cast<double>(outcome.n_user);
  scores.f_measure = f_measure(scores.precision, scores.recall);
  return scores;
}

EvaluationReport aggregate(std::vector<PairScores> pairs, const EvalConfig& cfg,
                           AggregationMode mode) {
  if (pairs.empty()) {
    throw EvalError(ErrorCode::EmptyInput, "no evaluation pairs to aggregate");
  }
  EvaluationReport report;
  report.pairs = std::move(pairs);
  report.config_echo = cfg;
  report.aggregation = mode;

  std::map<std::string, std::pair<double, std::size_t>> per_video;  // sum, count
  double flat_sum = 0.0;
  for (const PairScores& pair : report.pairs) {
    auto& [sum, count] = per_video[pair.video_id];
    sum += pair.f_measure;
    count += 1;
    flat_sum += pair.f_measure;
  }
  for (const auto& [video_id, acc] : per_video) {
    report.per_video_mean_f[video_id] = acc.first / static_cast<double>(acc.second);
  }

  if (mode == AggregationMode::per_video) {
    double sum = 0.0;
    for (const auto& [video_id, mean_f] : report.per_video_mean_f) sum += mean_f;
    report.overall_mean_f = sum / static_cast<double>(report.per_video_mean_f.size());
  } else {
    report.overall_mean_f = flat_sum / static_cast<double>(report.pairs.size());
  }
  return report;
}

}  // namespace vseval
