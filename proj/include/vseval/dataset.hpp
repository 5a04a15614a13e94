#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vseval/image.hpp"
#include "vseval/similarity.hpp"

namespace vseval {

struct SummaryRef {
  std::string label;
  std::filesystem::path dir;
};

struct VideoEntry {
  std::string id;
  std::vector<SummaryRef> automatic;
  std::vector<SummaryRef> user;
};

struct EvaluationJob {
  std::vector<VideoEntry> videos;
  EvalConfig config;

  std::size_t pair_count() const;
};

/// Parse and validate a JSON manifest. Relative summary directories are
/// resolved against the manifest's parent directory; every directory must
/// exist and contain at least one image file with a supported extension.
EvaluationJob load_manifest(const std::filesystem::path& path);

bool is_supported_image(const std::filesystem::path& path);

/// Frame number from the longest trailing digit run of the filename stem,
/// if any ("frame1921.jpeg" -> 1921).
std::optional<std::uint64_t> frame_id_from_name(const std::string& stem);

/// Decode one image file (PNG, JPEG, BMP or PPM) to 8-bit RGB. frame_id
/// comes from the filename digits, or `fallback_id` when the stem has none.
FrameImage decode_frame(const std::filesystem::path& path, std::uint64_t fallback_id = 0);

struct NamedFrame {
  std::filesystem::path path;
  std::uint64_t frame_id = 0;
};

/// Image files of one summary directory with frame ids assigned: parsed from
/// filename digits, or by lexicographic position for digitless names. The
/// result is sorted by frame_id; duplicate ids are an error.
std::vector<NamedFrame> enumerate_summary_frames(const std::filesystem::path& dir);

/// Binary PPM (P6) writer used by the fixture generator and tests.
void write_ppm(const std::filesystem::path& path, int width, int height,
               const std::vector<std::uint8_t>& rgb);

}  // namespace vseval
