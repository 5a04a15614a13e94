#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "vseval/color_features.hpp"
#include "vseval/texture_features.hpp"

namespace vseval {

struct FeatureRecord {
  std::uint64_t frame_id = 0;
  ColorHistogram color;
  TextureDescriptor texture;
};

struct FeatureCache {
  std::uint64_t fingerprint = 0;
  std::vector<FeatureRecord> records;
};

/// FNV-1a hash over the directory's image files: (filename, size, bytes) in
/// filename order. Independent of modification times, so a rewrite with
/// identical content keeps the fingerprint.
std::uint64_t directory_fingerprint(const std::filesystem::path& dir);

/// Versioned little-endian binary format: magic, version, fingerprint,
/// record count, then per frame (frame_id, 256 histogram doubles, 192
/// texture doubles).
void write_feature_cache(const std::filesystem::path& path, const FeatureCache& cache);

/// Strict reader; malformed or truncated files raise IoFailure.
FeatureCache read_feature_cache(const std::filesystem::path& path);

}  // namespace vseval
