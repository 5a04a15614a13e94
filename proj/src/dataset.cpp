#include "vseval/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <unordered_map>

#include <json.hpp>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "vseval/errors.hpp"

namespace fs = std::filesystem;

namespace vseval {

namespace {

const std::set<std::string> kSupportedExtensions = {".png", ".jpg", ".jpeg", ".bmp", ".ppm"};

std::string lower_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

std::vector<std::uint8_t> read_all_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw EvalError(ErrorCode::IoFailure, "cannot open " + path.string());
  }
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

// Image files of `dir`, sorted lexicographically by filename.
std::vector<fs::path> list_image_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_supported_image(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  return files;
}

const nlohmann::json& require_field(const nlohmann::json& obj, const char* key,
                                    const std::string& context) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw EvalError(ErrorCode::SchemaViolation, context + "." + key + " is missing");
  }
  return obj.at(key);
}

std::string require_string(const nlohmann::json& obj, const char* key,
                           const std::string& context) {
  const nlohmann::json& value = require_field(obj, key, context);
  if (!value.is_string() || value.get<std::string>().empty()) {
    throw EvalError(ErrorCode::SchemaViolation, context + "." + key + " must be a nonempty string");
  }
  return value.get<std::string>();
}

SummaryRef parse_summary_ref(const nlohmann::json& node, const fs::path& base,
                             const std::string& context) {
  SummaryRef ref;
  ref.label = require_string(node, "label", context);
  fs::path dir = fs::path(require_string(node, "dir", context));
  if (dir.is_relative()) dir = base / dir;
  if (!fs::is_directory(dir)) {
    throw EvalError(ErrorCode::SchemaViolation,
                    context + ".dir does not name a directory: " + dir.string());
  }
  if (list_image_files(dir).empty()) {
    throw EvalError(ErrorCode::EmptySummaryDirectory,
                    "no supported image files in " + dir.string());
  }
  ref.dir = dir;
  return ref;
}

}  // namespace

std::size_t EvaluationJob::pair_count() const {
  std::size_t count = 0;
  for (const VideoEntry& video : videos) {
    count += video.automatic.size() * video.user.size();
  }
  return count;
}

bool is_supported_image(const fs::path& path) {
  return kSupportedExtensions.count(lower_extension(path)) > 0;
}

std::optional<std::uint64_t> frame_id_from_name(const std::string& stem) {
  std::size_t begin = stem.size();
  while (begin > 0 && std::isdigit(static_cast<unsigned char>(stem[begin - 1]))) --begin;
  if (begin == stem.size()) return std::nullopt;
  try {
    return std::stoull(stem.substr(begin));
  } catch (const std::out_of_range&) {
    return std::nullopt;  // digit run too long for a frame number
  }
}

EvaluationJob load_manifest(const fs::path& path) {
  if (!fs::exists(path) || !fs::is_regular_file(path)) {
    throw EvalError(ErrorCode::ManifestNotFound, path.string());
  }
  std::ifstream in(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw EvalError(ErrorCode::SchemaViolation, std::string("manifest is not valid JSON: ") +
                                                    e.what());
  }

  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const nlohmann::json& videos = require_field(doc, "videos", "manifest");
  if (!videos.is_array() || videos.empty()) {
    throw EvalError(ErrorCode::SchemaViolation, "manifest.videos must be a nonempty array");
  }

  EvaluationJob job;
  std::set<std::pair<std::string, std::string>> seen_labels;
  for (std::size_t vi = 0; vi < videos.size(); ++vi) {
    const std::string context = "videos[" + std::to_string(vi) + "]";
    const nlohmann::json& vnode = videos.at(vi);
    VideoEntry video;
    video.id = require_string(vnode, "id", context);

    for (const char* listing : {"automatic", "user"}) {
      const nlohmann::json& refs = require_field(vnode, listing, context);
      if (!refs.is_array() || refs.empty()) {
        throw EvalError(ErrorCode::SchemaViolation,
                        context + "." + listing + " must be a nonempty array");
      }
      for (std::size_t ri = 0; ri < refs.size(); ++ri) {
        const std::string ref_context =
            context + "." + listing + "[" + std::to_string(ri) + "]";
        SummaryRef ref = parse_summary_ref(refs.at(ri), base, ref_context);
        if (!seen_labels.insert({video.id, ref.label}).second) {
          throw EvalError(ErrorCode::SchemaViolation,
                          ref_context + ".label duplicates '" + ref.label + "' within video '" +
                              video.id + "'");
        }
        (listing == std::string("automatic") ? video.automatic : video.user).push_back(ref);
      }
    }
    job.videos.push_back(std::move(video));
  }
  return job;
}

FrameImage decode_frame(const fs::path& path, std::uint64_t fallback_id) {
  if (!fs::exists(path)) {
    throw EvalError(ErrorCode::IoFailure, "no such file: " + path.string());
  }
  if (!is_supported_image(path)) {
    throw EvalError(ErrorCode::UnsupportedFormat,
                    path.string() + " (expected .png, .jpg, .jpeg, .bmp or .ppm)");
  }
  const std::vector<std::uint8_t> bytes = read_all_bytes(path);
  const cv::Mat decoded = cv::imdecode(bytes, cv::IMREAD_COLOR);
  if (decoded.empty()) {
    throw EvalError(ErrorCode::CorruptImage, "failed to decode " + path.string());
  }

  FrameImage img;
  img.width = decoded.cols;
  img.height = decoded.rows;
  img.source_path = path.string();
  img.frame_id = frame_id_from_name(path.stem().string()).value_or(fallback_id);
  img.pixels.resize(static_cast<std::size_t>(decoded.cols) * decoded.rows * 3);
  // OpenCV decodes to BGR; store RGB
  std::size_t at = 0;
  for (int y = 0; y < decoded.rows; ++y) {
    const cv::Vec3b* row = decoded.ptr<cv::Vec3b>(y);
    for (int x = 0; x < decoded.cols; ++x) {
      img.pixels[at++] = row[x][2];
      img.pixels[at++] = row[x][1];
      img.pixels[at++] = row[x][0];
    }
  }
  return img;
}

std::vector<NamedFrame> enumerate_summary_frames(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw EvalError(ErrorCode::SchemaViolation, "not a directory: " + dir.string());
  }
  const std::vector<fs::path> files = list_image_files(dir);
  if (files.empty()) {
    throw EvalError(ErrorCode::EmptySummaryDirectory, "no supported image files in " +
                                                          dir.string());
  }
  std::vector<NamedFrame> frames;
  frames.reserve(files.size());
  std::unordered_map<std::uint64_t, std::string> seen;
  for (std::size_t i = 0; i < files.size(); ++i) {
    NamedFrame frame;
    frame.path = files[i];
    frame.frame_id = frame_id_from_name(files[i].stem().string()).value_or(i);
    auto [it, inserted] = seen.emplace(frame.frame_id, files[i].filename().string());
    if (!inserted) {
      throw EvalError(ErrorCode::DuplicateFrameId,
                      "frame id " + std::to_string(frame.frame_id) + " claimed by both '" +
                          it->second + "' and '" + files[i].filename().string() + "' in " +
                          dir.string());
    }
    frames.push_back(std::move(frame));
  }
  std::sort(frames.begin(), frames.end(), [](const NamedFrame& a, const NamedFrame& b) {
    if (a.frame_id != b.frame_id) return a.frame_id < b.frame_id;
    return a.path.filename().string() < b.path.filename().string();
  });
  return frames;
}

void write_ppm(const fs::path& path, int width, int height,
               const std::vector<std::uint8_t>& rgb) {
  if (width < 1 || height < 1 ||
      rgb.size() != static_cast<std::size_t>(width) * height * 3) {
    throw EvalError(ErrorCode::WrongDimensions, "pixel buffer does not match " +
                                                    std::to_string(width) + "x" +
                                                    std::to_string(height));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw EvalError(ErrorCode::IoFailure, "cannot write " + path.string());
  }
  out << "P6\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
  if (!out) {
    throw EvalError(ErrorCode::IoFailure, "short write to " + path.string());
  }
}

}  // namespace vseval
