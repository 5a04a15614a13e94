// vseval: score automatic keyframe summaries against user (ground-truth)
// summaries with color-histogram + wavelet-texture matching.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vseval/dataset.hpp"
#include "vseval/errors.hpp"
#include "vseval/feature_cache.hpp"
#include "vseval/fixtures.hpp"
#include "vseval/pipeline.hpp"
#include "vseval/report_io.hpp"

namespace {

int exit_code_for(vseval::ErrorCode code) {
  using vseval::ErrorCode;
  switch (code) {
    case ErrorCode::ManifestNotFound:
    case ErrorCode::SchemaViolation:
    case ErrorCode::EmptySummaryDirectory:
    case ErrorCode::DuplicateFrameId:
      return 3;
    case ErrorCode::UnsupportedFormat:
    case ErrorCode::CorruptImage:
    case ErrorCode::EmptyImage:
      return 4;
    case ErrorCode::WrongDimensions:
    case ErrorCode::LengthMismatch:
    case ErrorCode::NonNormalizedInput:
    case ErrorCode::OutOfRange:
    case ErrorCode::EmptySummary:
    case ErrorCode::EmptyInput:
    case ErrorCode::ZeroDenominator:
    case ErrorCode::InvalidConfig:
      return 5;
    case ErrorCode::IoFailure:
      return 6;
  }
  return 1;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size()))) {
    throw vseval::EvalError(vseval::ErrorCode::IoFailure, "cannot write " + path);
  }
}

struct EvaluateArgs {
  std::string manifest;
  double color_threshold = 0.97;
  double texture_threshold = 0.97;
  std::string match_mode = "color_and_texture";
  std::string aggregation = "per-video";
  std::string report_json;
  std::string report_csv;
  std::string cache;
  int jobs = 0;
};

int run_evaluate(const EvaluateArgs& args) {
  vseval::RunOptions opts;
  opts.config.color_threshold = args.color_threshold;
  opts.config.texture_threshold = args.texture_threshold;
  opts.config.match_mode = vseval::match_mode_from_name(args.match_mode);
  opts.aggregation = vseval::aggregation_mode_from_name(args.aggregation);
  opts.jobs = args.jobs;
  if (!args.cache.empty()) opts.cache_dir = args.cache;

  vseval::EvaluationJob job = vseval::load_manifest(args.manifest);
  job.config = opts.config;
  const vseval::RunArtifacts artifacts = vseval::run_evaluation(job, opts);

  for (const std::string& line : artifacts.log) {
    std::cerr << "warning: " << line << "\n";
  }
  const std::string json = vseval::report_to_json(artifacts.report);
  if (args.report_json.empty()) {
    std::cout << json;
  } else {
    write_text_file(args.report_json, json);
  }
  if (!args.report_csv.empty()) {
    write_text_file(args.report_csv, vseval::report_to_csv(artifacts.report));
  }
  return 0;
}

int run_features(const std::string& dir, const std::string& out, int jobs) {
  std::vector<std::string> warnings;
  vseval::FeatureCache cache;
  cache.fingerprint = vseval::directory_fingerprint(dir);
  cache.records = vseval::extract_directory_features(dir, jobs, &warnings);
  for (const std::string& line : warnings) {
    std::cerr << "warning: " << line << "\n";
  }
  vseval::write_feature_cache(out, cache);
  std::cerr << "wrote " << cache.records.size() << " feature records to " << out << "\n";
  return 0;
}

int run_make_fixture(const std::string& kind, const std::string& out, std::uint64_t seed) {
  const vseval::FixtureResult result =
      vseval::make_fixture(vseval::fixture_kind_from_name(kind), out, seed);
  std::cerr << "fixture '" << kind << "' written; manifest: " << result.manifest_path.string()
            << " (seed " << result.seed_used << ")\n";
  for (const std::string& note : result.notes) {
    std::cerr << "  " << note << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keyframe-summary evaluation: HSV color histograms and Haar-wavelet texture "
               "under the Bhattacharyya coefficient, reported as precision/recall/F-measure"};
  app.require_subcommand(1);

  EvaluateArgs eval_args;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Evaluate a manifest of summary pairs");
  evaluate->add_option("--manifest", eval_args.manifest, "Path to the JSON manifest")->required();
  evaluate->add_option("--color-threshold", eval_args.color_threshold,
                       "Color match threshold in (0,1]")->capture_default_str();
  evaluate->add_option("--texture-threshold", eval_args.texture_threshold,
                       "Texture match threshold in (0,1]")->capture_default_str();
  evaluate->add_option("--match-mode", eval_args.match_mode,
                       "color_and_texture|color_only|texture_only|color_or_texture")->capture_default_str();
  evaluate->add_option("--aggregation", eval_args.aggregation, "per-video|flat")->capture_default_str();
  evaluate->add_option("--report-json", eval_args.report_json,
                       "Write the JSON report here (default: stdout)");
  evaluate->add_option("--report-csv", eval_args.report_csv, "Also write a CSV report");
  evaluate->add_option("--cache", eval_args.cache, "Feature cache directory");
  evaluate->add_option("--jobs", eval_args.jobs, "Worker threads (default: all processors)");

  std::string features_dir, features_out;
  int features_jobs = 0;
  CLI::App* features = app.add_subcommand("features", "Extract features of one summary directory");
  features->add_option("--dir", features_dir, "Summary directory")->required();
  features->add_option("--out", features_out, "Output cache file")->required();
  features->add_option("--jobs", features_jobs, "Worker threads (default: all processors)");

  std::string fixture_kind, fixture_out;
  std::uint64_t fixture_seed = 0;
  CLI::App* fixture = app.add_subcommand("make-fixture", "Generate a demonstration dataset");
  fixture->add_option("--kind", fixture_kind, "shuffle_collision|identical|disjoint")->required();
  fixture->add_option("--out", fixture_out, "Output directory")->required();
  fixture->add_option("--seed", fixture_seed, "Permutation seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (evaluate->parsed()) return run_evaluate(eval_args);
    if (features->parsed()) return run_features(features_dir, features_out, features_jobs);
    if (fixture->parsed()) return run_make_fixture(fixture_kind, fixture_out, fixture_seed);
  } catch (const vseval::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
