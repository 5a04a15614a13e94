#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "vseval/dataset.hpp"
#include "vseval/errors.hpp"
#include "vseval/fixtures.hpp"
#include "vseval/matching.hpp"
#include "vseval/metrics.hpp"
#include "vseval/pipeline.hpp"

namespace py = pybind11;
using namespace vseval;

namespace {

FrameImage frame_from_array(const py::array_t<std::uint8_t>& image) {
  const auto buf = image.request();
  if (buf.ndim != 3 || buf.shape[2] != 3) {
    throw py::value_error("expected an HxWx3 uint8 array");
  }
  FrameImage img;
  img.height = static_cast<int>(buf.shape[0]);
  img.width = static_cast<int>(buf.shape[1]);
  img.pixels.resize(static_cast<std::size_t>(img.width) * img.height * 3);
  const auto view = image.unchecked<3>();
  std::size_t at = 0;
  for (py::ssize_t y = 0; y < view.shape(0); ++y) {
    for (py::ssize_t x = 0; x < view.shape(1); ++x) {
      img.pixels[at++] = view(y, x, 0);
      img.pixels[at++] = view(y, x, 1);
      img.pixels[at++] = view(y, x, 2);
    }
  }
  return img;
}

py::array_t<double> py_rgb_to_hsv(const py::array_t<std::uint8_t>& image) {
  const FrameImage img = frame_from_array(image);
  const HsvImage hsv = rgb_to_hsv(img);
  py::array_t<double> out({hsv.height, hsv.width, 3});
  auto view = out.mutable_unchecked<3>();
  for (int y = 0; y < hsv.height; ++y) {
    for (int x = 0; x < hsv.width; ++x) {
      const HsvPixel& px = hsv.pixels[static_cast<std::size_t>(y) * hsv.width + x];
      view(y, x, 0) = px.h;
      view(y, x, 1) = px.s;
      view(y, x, 2) = px.v;
    }
  }
  return out;
}

py::array_t<double> py_color_histogram(const py::array_t<std::uint8_t>& image) {
  const ColorHistogram hist = color_histogram(rgb_to_hsv(frame_from_array(image)));
  return py::array_t<double>(static_cast<py::ssize_t>(hist.bins.size()), hist.bins.data());
}

py::array_t<double> py_texture_descriptor(const py::array_t<std::uint8_t>& image) {
  const TextureDescriptor desc =
      texture_descriptor(resize_to_64(rgb_to_hsv(frame_from_array(image))));
  return py::array_t<double>(static_cast<py::ssize_t>(desc.values.size()), desc.values.data());
}

py::array_t<double> py_haar_approx(const py::array_t<double>& grid, int levels) {
  const auto buf = grid.request();
  if (buf.ndim != 2 || buf.shape[0] != buf.shape[1]) {
    throw py::value_error("expected a square 2-D float array");
  }
  const int size = static_cast<int>(buf.shape[0]);
  std::vector<double> data(static_cast<std::size_t>(size) * size);
  const auto view = grid.unchecked<2>();
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) data[static_cast<std::size_t>(r) * size + c] = view(r, c);
  }
  const std::vector<double> approx = haar_approx(data, size, levels);
  const int out_side = size >> levels;
  py::array_t<double> out({out_side, out_side});
  auto out_view = out.mutable_unchecked<2>();
  for (int r = 0; r < out_side; ++r) {
    for (int c = 0; c < out_side; ++c) {
      out_view(r, c) = approx[static_cast<std::size_t>(r) * out_side + c];
    }
  }
  return out;
}

double py_bhattacharyya(const py::array_t<double>& p, const py::array_t<double>& q) {
  const auto pb = p.request();
  const auto qb = q.request();
  if (pb.ndim != 1 || qb.ndim != 1) {
    throw py::value_error("expected 1-D arrays");
  }
  const auto pv = p.unchecked<1>();
  const auto qv = q.unchecked<1>();
  std::vector<double> pd(pv.shape(0)), qd(qv.shape(0));
  for (py::ssize_t i = 0; i < pv.shape(0); ++i) pd[static_cast<std::size_t>(i)] = pv(i);
  for (py::ssize_t i = 0; i < qv.shape(0); ++i) qd[static_cast<std::size_t>(i)] = qv(i);
  return bhattacharyya(pd, qd);
}

EvalConfig config_from(double color_threshold, double texture_threshold,
                       const std::string& match_mode) {
  EvalConfig cfg;
  cfg.color_threshold = color_threshold;
  cfg.texture_threshold = texture_threshold;
  cfg.match_mode = match_mode_from_name(match_mode);
  cfg.validate();
  return cfg;
}

SummarySet set_from_frames(const std::vector<std::pair<std::uint64_t, py::array_t<std::uint8_t>>>&
                               frames,
                           SummaryKind kind, const char* label) {
  SummarySet set;
  set.video_id = "py";
  set.kind = kind;
  set.label = label;
  for (const auto& [frame_id, image] : frames) {
    const HsvImage hsv = rgb_to_hsv(frame_from_array(image));
    set.frames.push_back(
        {frame_id, color_histogram(hsv), texture_descriptor(resize_to_64(hsv))});
  }
  return set;
}

py::dict outcome_to_dict(const MatchOutcome& outcome) {
  py::list pairs;
  for (const MatchedPair& pair : outcome.pairs) {
    pairs.append(py::make_tuple(pair.auto_frame_id, pair.user_frame_id, pair.color_score,
                                pair.texture_score));
  }
  py::dict out;
  out["pairs"] = pairs;
  out["n_auto"] = outcome.n_auto;
  out["n_user"] = outcome.n_user;
  out["n_matched"] = outcome.n_matched;
  return out;
}

py::dict py_match_summaries(
    const std::vector<std::pair<std::uint64_t, py::array_t<std::uint8_t>>>& auto_frames,
    const std::vector<std::pair<std::uint64_t, py::array_t<std::uint8_t>>>& user_frames,
    double color_threshold, double texture_threshold, const std::string& match_mode) {
  const EvalConfig cfg = config_from(color_threshold, texture_threshold, match_mode);
  const MatchOutcome outcome =
      match_summaries(set_from_frames(auto_frames, SummaryKind::automatic, "auto"),
                      set_from_frames(user_frames, SummaryKind::user, "user"), cfg);
  return outcome_to_dict(outcome);
}

py::dict py_evaluate_manifest(const std::filesystem::path& manifest, double color_threshold,
                              double texture_threshold, const std::string& match_mode,
                              const std::string& aggregation, int jobs,
                              const std::optional<std::filesystem::path>& cache) {
  RunOptions opts;
  opts.config = config_from(color_threshold, texture_threshold, match_mode);
  opts.aggregation = aggregation_mode_from_name(aggregation);
  opts.jobs = jobs;
  opts.cache_dir = cache;

  EvaluationJob job = load_manifest(manifest);
  job.config = opts.config;
  const RunArtifacts artifacts = run_evaluation(job, opts);

  py::list pairs;
  for (const PairScores& pair : artifacts.report.pairs) {
    py::dict row;
    row["video"] = pair.video_id;
    row["auto"] = pair.auto_label;
    row["user"] = pair.user_label;
    row["n_auto"] = pair.n_auto;
    row["n_user"] = pair.n_user;
    row["n_matched"] = pair.n_matched;
    row["precision"] = pair.precision;
    row["recall"] = pair.recall;
    row["f"] = pair.f_measure;
    pairs.append(row);
  }
  py::dict per_video;
  for (const auto& [video_id, mean_f] : artifacts.report.per_video_mean_f) {
    per_video[py::str(video_id)] = mean_f;
  }
  py::dict config;
  config["color_threshold"] = artifacts.report.config_echo.color_threshold;
  config["texture_threshold"] = artifacts.report.config_echo.texture_threshold;
  config["match_mode"] = match_mode_name(artifacts.report.config_echo.match_mode);
  config["aggregation"] = aggregation_mode_name(artifacts.report.aggregation);

  py::dict report;
  report["config"] = config;
  report["pairs"] = pairs;
  report["per_video_mean_f"] = per_video;
  report["overall_mean_f"] = artifacts.report.overall_mean_f;
  report["log"] = artifacts.log;
  return report;
}

std::string py_make_fixture(const std::string& kind, const std::filesystem::path& out_dir,
                            std::uint64_t seed) {
  const FixtureResult result = make_fixture(fixture_kind_from_name(kind), out_dir, seed);
  return result.manifest_path.string();
}

py::tuple py_pair_scores(std::size_t n_matched, std::size_t n_auto, std::size_t n_user) {
  MatchOutcome outcome;
  outcome.n_auto = n_auto;
  outcome.n_user = n_user;
  outcome.n_matched = n_matched;
  const PairScores scores = pair_scores(outcome, "py", "auto", "user");
  return py::make_tuple(scores.precision, scores.recall, scores.f_measure);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Keyframe-summary evaluation: HSV histograms, Haar-wavelet texture and the "
            "Bhattacharyya coefficient";
  m.attr("__version__") = "0.1.0";

  py::register_exception<EvalError>(m, "EvalError");

  m.def("quantize_hsv", &quantize_hsv, py::arg("h"), py::arg("s"), py::arg("v"),
        "Joint HSV bin index (32x4x2 layout)");
  m.def("rgb_to_hsv", &py_rgb_to_hsv, py::arg("image"),
        "Hexcone conversion of an HxWx3 uint8 array; H in degrees, S and V in [0,1]");
  m.def("color_histogram", &py_color_histogram, py::arg("image"),
        "256-bin normalized HSV histogram of an HxWx3 uint8 array");
  m.def("texture_descriptor", &py_texture_descriptor, py::arg("image"),
        "192-value level-3 Haar approximation descriptor of an HxWx3 uint8 array");
  m.def("haar_approx", &py_haar_approx, py::arg("grid"), py::arg("levels") = 3,
        "Averaging-convention 2-D Haar approximation of a square grid");
  m.def("bhattacharyya", &py_bhattacharyya, py::arg("p"), py::arg("q"),
        "Bhattacharyya coefficient of two normalized distributions");
  m.def("match_summaries", &py_match_summaries, py::arg("auto_frames"), py::arg("user_frames"),
        py::arg("color_threshold") = 0.97, py::arg("texture_threshold") = 0.97,
        py::arg("match_mode") = "color_and_texture",
        "Greedy matching of (frame_id, image) lists; returns pairs and counts");
  m.def("pair_scores", &py_pair_scores, py::arg("n_matched"), py::arg("n_auto"),
        py::arg("n_user"), "(precision, recall, f_measure) for one evaluation pair");
  m.def("evaluate_manifest", &py_evaluate_manifest, py::arg("manifest"),
        py::arg("color_threshold") = 0.97, py::arg("texture_threshold") = 0.97,
        py::arg("match_mode") = "color_and_texture", py::arg("aggregation") = "per-video",
        py::arg("jobs") = 0, py::arg("cache") = std::nullopt,
        "Run the full evaluation pipeline on a manifest; returns the report as a dict");
  m.def("make_fixture", &py_make_fixture, py::arg("kind"), py::arg("out_dir"),
        py::arg("seed") = 0, "Generate a demonstration dataset; returns the manifest path");
}
