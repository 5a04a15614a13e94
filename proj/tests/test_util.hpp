#pragma once

// Shared helpers and independent oracles for the test suites. Oracles here
// intentionally avoid the library's implementation paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "vseval/image.hpp"

namespace vseval::testutil {

// Scratch directory under the build tree, wiped on construction.
class TempDir {
 public:
  explicit TempDir(const std::string& name) {
    path_ = std::filesystem::temp_directory_path() / ("vseval_test_" + name);
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Inverse hexcone conversion, used as the round-trip oracle for rgb_to_hsv.
inline std::array<std::uint8_t, 3> hsv_to_rgb_oracle(double h, double s, double v) {
  const double c = v * s;
  const double hp = h / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0.0, g = 0.0, b = 0.0;
  if (hp < 1.0) { r = c; g = x; }
  else if (hp < 2.0) { r = x; g = c; }
  else if (hp < 3.0) { g = c; b = x; }
  else if (hp < 4.0) { g = x; b = c; }
  else if (hp < 5.0) { r = x; b = c; }
  else { r = c; b = x; }
  const double m = v - c;
  auto to8 = [](double val) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(val, 0.0, 1.0) * 255.0));
  };
  return {to8(r + m), to8(g + m), to8(b + m)};
}

// Independent block-mean oracle for the level-3 Haar approximation.
inline std::vector<double> block_means_oracle(const std::vector<double>& grid, int size,
                                              int block) {
  const int out = size / block;
  std::vector<double> means(static_cast<std::size_t>(out) * out, 0.0);
  for (int r = 0; r < out; ++r) {
    for (int c = 0; c < out; ++c) {
      double sum = 0.0;
      for (int y = 0; y < block; ++y) {
        for (int x = 0; x < block; ++x) {
          sum += grid[static_cast<std::size_t>(r * block + y) * size + (c * block + x)];
        }
      }
      means[static_cast<std::size_t>(r) * out + c] = sum / (block * block);
    }
  }
  return means;
}

// Exhaustive maximum bipartite matching on an adjacency matrix
// (adj[i*n_user + j] == true when auto i may match user j).
inline std::size_t max_matching_oracle(const std::vector<bool>& adj, std::size_t n_auto,
                                       std::size_t n_user) {
  std::vector<bool> used(n_user, false);
  std::function<std::size_t(std::size_t)> best = [&](std::size_t i) -> std::size_t {
    if (i == n_auto) return 0;
    std::size_t result = best(i + 1);  // leave auto i unmatched
    for (std::size_t j = 0; j < n_user; ++j) {
      if (used[j] || !adj[i * n_user + j]) continue;
      used[j] = true;
      result = std::max(result, 1 + best(i + 1));
      used[j] = false;
    }
    return result;
  };
  return best(0);
}

inline FrameImage frame_from_rgb(std::vector<std::uint8_t> rgb, int width, int height,
                                 std::uint64_t frame_id = 0) {
  FrameImage img;
  img.frame_id = frame_id;
  img.width = width;
  img.height = height;
  img.pixels = std::move(rgb);
  img.source_path = "<memory>";
  return img;
}

inline FrameImage solid_frame(int width, int height, std::uint8_t r, std::uint8_t g,
                              std::uint8_t b, std::uint64_t frame_id = 0) {
  std::vector<std::uint8_t> px;
  px.reserve(static_cast<std::size_t>(width) * height * 3);
  for (int i = 0; i < width * height; ++i) {
    px.push_back(r);
    px.push_back(g);
    px.push_back(b);
  }
  return frame_from_rgb(std::move(px), width, height, frame_id);
}

inline FrameImage random_frame(std::mt19937_64& rng, int width, int height,
                               std::uint64_t frame_id = 0) {
  std::uniform_int_distribution<int> byte(0, 255);
  std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height * 3);
  for (auto& value : px) value = static_cast<std::uint8_t>(byte(rng));
  return frame_from_rgb(std::move(px), width, height, frame_id);
}

// Random probability vector with a few dominant entries, normalized to 1.
inline std::vector<double> random_distribution(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (double& value : p) {
    const double draw = unit(rng);
    value = draw * draw * draw;  // skew mass toward few bins
    total += value;
  }
  for (double& value : p) value /= total;
  return p;
}

}  // namespace vseval::testutil
