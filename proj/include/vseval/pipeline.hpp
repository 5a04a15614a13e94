#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vseval/dataset.hpp"
#include "vseval/feature_cache.hpp"
#include "vseval/matching.hpp"
#include "vseval/metrics.hpp"

namespace vseval {

struct RunOptions {
  EvalConfig config;
  AggregationMode aggregation = AggregationMode::per_video;
  int jobs = 0;  // 0 = number of available processors
  std::optional<std::filesystem::path> cache_dir;
};

struct RunArtifacts {
  EvaluationReport report;
  std::optional<std::filesystem::path> feature_cache_path;
  std::vector<std::string> log;  // warnings, in deterministic frame order
};

/// Decode and featurize every frame of one summary directory. Frames are
/// processed in parallel across `jobs` workers; warnings (black-frame
/// descriptor substitutions) are appended to `warnings` in frame order.
std::vector<FeatureRecord> extract_directory_features(const std::filesystem::path& dir,
                                                      int jobs,
                                                      std::vector<std::string>* warnings = nullptr);

/// Full pipeline: features (cache-aware when opts.cache_dir is set),
/// matching per (automatic, user) pair, metrics, aggregation.
RunArtifacts run_evaluation(const EvaluationJob& job, const RunOptions& opts);

}  // namespace vseval
