#include "vseval/fixtures.hpp"

#include <array>
#include <fstream>
#include <random>

#include <json.hpp>

#include "vseval/color_features.hpp"
#include "vseval/dataset.hpp"
#include "vseval/errors.hpp"
#include "vseval/similarity.hpp"
#include "vseval/texture_features.hpp"

namespace fs = std::filesystem;

namespace vseval {

namespace {

constexpr double kFixtureTextureThreshold = 0.97;
constexpr int kMaxSeedRetries = 64;

struct Rgb {
  std::uint8_t r, g, b;
};

std::vector<std::uint8_t> solid_split_frame(int side, Rgb left, Rgb right) {
  std::vector<std::uint8_t> px(static_cast<std::size_t>(side) * side * 3);
  std::size_t at = 0;
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      const Rgb c = (x < side / 2) ? left : right;
      px[at++] = c.r;
      px[at++] = c.g;
      px[at++] = c.b;
    }
  }
  return px;
}

std::vector<std::uint8_t> quadrant_frame(int side) {
  const Rgb red{255, 0, 0}, green{0, 255, 0}, blue{0, 0, 255}, black{0, 0, 0};
  std::vector<std::uint8_t> px(static_cast<std::size_t>(side) * side * 3);
  std::size_t at = 0;
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      const Rgb c = (y < side / 2) ? (x < side / 2 ? red : green)
                                   : (x < side / 2 ? blue : black);
      px[at++] = c.r;
      px[at++] = c.g;
      px[at++] = c.b;
    }
  }
  return px;
}

// Bounded draw via rejection, so permutations do not depend on the standard
// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

std::vector<std::uint8_t> shuffle_pixels(const std::vector<std::uint8_t>& rgb,
                                         std::uint64_t seed) {
  const std::size_t n = rgb.size() / 3;
  std::vector<std::uint32_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[uniform_below(rng, i + 1)]);
  }
  std::vector<std::uint8_t> out(rgb.size());
  for (std::size_t i = 0; i < n; ++i) {
    out[3 * i + 0] = rgb[3 * order[i] + 0];
    out[3 * i + 1] = rgb[3 * order[i] + 1];
    out[3 * i + 2] = rgb[3 * order[i] + 2];
  }
  return out;
}

struct FrameScores {
  double color;
  double texture;
};

FrameScores score_pair(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
                       int side) {
  auto features = [side](const std::vector<std::uint8_t>& rgb) {
    FrameImage img;
    img.width = side;
    img.height = side;
    img.pixels = rgb;
    const HsvImage hsv = rgb_to_hsv(img);
    return std::pair{color_histogram(hsv), texture_descriptor(resize_to_64(hsv))};
  };
  const auto [ha, ta] = features(a);
  const auto [hb, tb] = features(b);
  return {bhattacharyya(ha, hb), bhattacharyya(ta, tb)};
}

void write_manifest(const fs::path& path, const std::string& video_id,
                    const std::string& auto_dir, const std::string& user_dir) {
  nlohmann::json doc;
  doc["videos"] = {{
      {"id", video_id},
      {"automatic", {{{"label", "auto"}, {"dir", auto_dir}}}},
      {"user", {{{"label", "user"}, {"dir", user_dir}}}},
  }};
  std::ofstream out(path);
  if (!out) {
    throw EvalError(ErrorCode::IoFailure, "cannot write " + path.string());
  }
  out << doc.dump(2) << "\n";
}

std::string score_note(const char* what, const FrameScores& scores) {
  return std::string(what) + ": color=" + std::to_string(scores.color) +
         " texture=" + std::to_string(scores.texture);
}

}  // namespace

const char* fixture_kind_name(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::shuffle_collision: return "shuffle_collision";
    case FixtureKind::identical: return "identical";
    case FixtureKind::disjoint: return "disjoint";
  }
  return "unknown";
}

FixtureKind fixture_kind_from_name(const std::string& name) {
  if (name == "shuffle_collision") return FixtureKind::shuffle_collision;
  if (name == "identical") return FixtureKind::identical;
  if (name == "disjoint") return FixtureKind::disjoint;
  throw EvalError(ErrorCode::InvalidConfig, "unknown fixture kind '" + name + "'");
}

FixtureResult make_fixture(FixtureKind kind, const fs::path& out_dir, std::uint64_t seed) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) {
    throw EvalError(ErrorCode::IoFailure, "cannot create " + out_dir.string());
  }

  FixtureResult result;
  result.manifest_path = out_dir / "manifest.json";
  result.seed_used = seed;

  switch (kind) {
    case FixtureKind::shuffle_collision: {
      constexpr int side = 128;
      const std::vector<std::uint8_t> base = quadrant_frame(side);
      std::vector<std::uint8_t> shuffled;
      FrameScores scores{};
      bool accepted = false;
      for (int attempt = 0; attempt < kMaxSeedRetries; ++attempt) {
        result.seed_used = seed + static_cast<std::uint64_t>(attempt);
        shuffled = shuffle_pixels(base, result.seed_used);
        scores = score_pair(base, shuffled, side);
        // the permutation must keep the histogram collision and break texture
        if (scores.color == 1.0 && scores.texture < kFixtureTextureThreshold) {
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        throw EvalError(ErrorCode::IoFailure,
                        "could not generate a shuffle collision in " +
                            std::to_string(kMaxSeedRetries) + " attempts");
      }
      fs::create_directories(out_dir / "auto");
      fs::create_directories(out_dir / "user");
      write_ppm(out_dir / "auto" / "frame0001.ppm", side, side, base);
      write_ppm(out_dir / "user" / "frame0001.ppm", side, side, shuffled);
      write_manifest(result.manifest_path, "shuffle_collision", "auto", "user");
      result.notes.push_back(score_note("base vs shuffled", scores));
      break;
    }
    case FixtureKind::identical: {
      constexpr int side = 64;
      const std::array<std::pair<Rgb, Rgb>, 3> scenes = {{
          {{255, 0, 0}, {0, 255, 0}},
          {{0, 0, 255}, {255, 255, 0}},
          {{0, 255, 255}, {255, 0, 255}},
      }};
      fs::create_directories(out_dir / "frames");
      char name[32];
      for (std::size_t i = 0; i < scenes.size(); ++i) {
        std::snprintf(name, sizeof(name), "frame%04zu.ppm", i + 1);
        write_ppm(out_dir / "frames" / name, side, side,
                  solid_split_frame(side, scenes[i].first, scenes[i].second));
      }
      write_manifest(result.manifest_path, "identical", "frames", "frames");
      result.notes.push_back("automatic and user summaries reference the same directory");
      break;
    }
    case FixtureKind::disjoint: {
      constexpr int side = 64;
      fs::create_directories(out_dir / "auto");
      fs::create_directories(out_dir / "user");
      const std::vector<std::uint8_t> red = solid_split_frame(side, {255, 0, 0}, {255, 0, 0});
      const std::vector<std::uint8_t> blue = solid_split_frame(side, {0, 0, 255}, {0, 0, 255});
      write_ppm(out_dir / "auto" / "frame0001.ppm", side, side, red);
      write_ppm(out_dir / "auto" / "frame0002.ppm", side, side, red);
      write_ppm(out_dir / "user" / "frame0001.ppm", side, side, blue);
      write_ppm(out_dir / "user" / "frame0002.ppm", side, side, blue);
      write_manifest(result.manifest_path, "disjoint", "auto", "user");
      const FrameScores scores = score_pair(red, blue, side);
      result.notes.push_back(score_note("red vs blue", scores));
      break;
    }
  }
  return result;
}

}  // namespace vseval
