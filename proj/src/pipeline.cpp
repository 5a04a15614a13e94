#include "vseval/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "vseval/errors.hpp"

namespace fs = std::filesystem;

namespace vseval {

namespace {

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

FeatureRecord featurize(const NamedFrame& frame, std::string* warning) {
  const FrameImage rgb = decode_frame(frame.path, frame.frame_id);
  const HsvImage hsv = rgb_to_hsv(rgb);

  FeatureRecord record;
  record.frame_id = frame.frame_id;
  record.color = color_histogram(hsv);
  bool all_black = false;
  record.texture = texture_descriptor(resize_to_64(hsv), &all_black);
  if (all_black && warning) {
    *warning = "black frame " + frame.path.string() + ": texture descriptor set to uniform";
  }
  return record;
}

// Index of cache files under cache_dir keyed by the fingerprint in their
// header, so any file written by `features` is picked up for its directory.
std::map<std::uint64_t, fs::path> index_cache_dir(const fs::path& cache_dir,
                                                  std::vector<std::string>* log) {
  std::map<std::uint64_t, fs::path> index;
  if (!fs::is_directory(cache_dir)) return index;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(cache_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".vsfc") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& file : files) {
    try {
      const FeatureCache cache = read_feature_cache(file);
      index.emplace(cache.fingerprint, file);
    } catch (const EvalError& e) {
      if (log) log->push_back(std::string("ignoring unreadable cache file: ") + e.what());
    }
  }
  return index;
}

std::string cache_file_name(std::uint64_t fingerprint) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx.vsfc",
                static_cast<unsigned long long>(fingerprint));
  return buf;
}

}  // namespace

std::vector<FeatureRecord> extract_directory_features(const fs::path& dir, int jobs,
                                                      std::vector<std::string>* warnings) {
  const std::vector<NamedFrame> frames = enumerate_summary_frames(dir);
  std::vector<FeatureRecord> records(frames.size());
  std::vector<std::string> slots(frames.size());
  parallel_for(frames.size(), jobs,
               [&](std::size_t i) { records[i] = featurize(frames[i], &slots[i]); });
  if (warnings) {
    for (const std::string& slot : slots) {
      if (!slot.empty()) warnings->push_back(slot);
    }
  }
  return records;
}

RunArtifacts run_evaluation(const EvaluationJob& job, const RunOptions& opts) {
  opts.config.validate();
  if (job.videos.empty()) {
    throw EvalError(ErrorCode::EmptyInput, "evaluation job has no videos");
  }

  RunArtifacts artifacts;
  if (opts.cache_dir) {
    fs::create_directories(*opts.cache_dir);
    artifacts.feature_cache_path = *opts.cache_dir;
  }

  // Featurize each distinct directory once, cache-aware.
  std::map<std::uint64_t, fs::path> cache_index;
  if (opts.cache_dir) cache_index = index_cache_dir(*opts.cache_dir, &artifacts.log);

  std::map<std::string, std::vector<FeatureRecord>> features_by_dir;
  auto features_for = [&](const fs::path& dir) -> const std::vector<FeatureRecord>& {
    const std::string key = fs::weakly_canonical(dir).string();
    auto it = features_by_dir.find(key);
    if (it != features_by_dir.end()) return it->second;

    if (opts.cache_dir) {
      const std::uint64_t fingerprint = directory_fingerprint(dir);
      auto hit = cache_index.find(fingerprint);
      if (hit != cache_index.end()) {
        FeatureCache cache = read_feature_cache(hit->second);
        return features_by_dir.emplace(key, std::move(cache.records)).first->second;
      }
      std::vector<FeatureRecord> records =
          extract_directory_features(dir, opts.jobs, &artifacts.log);
      const fs::path cache_path = *opts.cache_dir / cache_file_name(fingerprint);
      write_feature_cache(cache_path, FeatureCache{fingerprint, records});
      cache_index.emplace(fingerprint, cache_path);
      return features_by_dir.emplace(key, std::move(records)).first->second;
    }
    return features_by_dir
        .emplace(key, extract_directory_features(dir, opts.jobs, &artifacts.log))
        .first->second;
  };

  struct PairTask {
    const VideoEntry* video;
    const SummaryRef* auto_ref;
    const SummaryRef* user_ref;
  };
  std::vector<PairTask> tasks;
  std::vector<SummarySet> auto_sets;
  std::vector<SummarySet> user_sets;
  for (const VideoEntry& video : job.videos) {
    for (const SummaryRef& auto_ref : video.automatic) {
      for (const SummaryRef& user_ref : video.user) {
        tasks.push_back({&video, &auto_ref, &user_ref});
      }
    }
  }

  // Resolve features sequentially (shared map), then match pairs in parallel.
  auto make_set = [&](const VideoEntry& video, const SummaryRef& ref, SummaryKind kind) {
    SummarySet set;
    set.video_id = video.id;
    set.kind = kind;
    set.label = ref.label;
    for (const FeatureRecord& record : features_for(ref.dir)) {
      set.frames.push_back({record.frame_id, record.color, record.texture});
    }
    return set;
  };
  auto_sets.reserve(tasks.size());
  user_sets.reserve(tasks.size());
  for (const PairTask& task : tasks) {
    auto_sets.push_back(make_set(*task.video, *task.auto_ref, SummaryKind::automatic));
    user_sets.push_back(make_set(*task.video, *task.user_ref, SummaryKind::user));
  }

  std::vector<PairScores> scores(tasks.size());
  parallel_for(tasks.size(), opts.jobs, [&](std::size_t i) {
    const MatchOutcome outcome = match_summaries(auto_sets[i], user_sets[i], opts.config);
    scores[i] = pair_scores(outcome, tasks[i].video->id, tasks[i].auto_ref->label,
                            tasks[i].user_ref->label);
  });

  artifacts.report = aggregate(std::move(scores), opts.config, opts.aggregation);
  return artifacts;
}

}  // namespace vseval
