#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace vseval {

enum class FixtureKind {
  shuffle_collision,  // image + pixel permutation: same histogram, different texture
  identical,          // automatic and user summaries reference the same frames
  disjoint,           // red-only vs. blue-only frames, nothing matches
};

const char* fixture_kind_name(FixtureKind kind);
FixtureKind fixture_kind_from_name(const std::string& name);

struct FixtureResult {
  std::filesystem::path manifest_path;
  std::uint64_t seed_used = 0;
  std::vector<std::string> notes;  // e.g. measured similarity scores
};

/// Write a ready-to-evaluate dataset (PPM frames + manifest.json) under
/// out_dir. shuffle_collision verifies its own scores after generation
/// (color Bhattacharyya exactly 1, texture below 0.97) and retries with the
/// next seed if the permutation lands too close.
FixtureResult make_fixture(FixtureKind kind, const std::filesystem::path& out_dir,
                           std::uint64_t seed = 0);

}  // namespace vseval
