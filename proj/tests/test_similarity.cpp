#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "test_util.hpp"
#include "vseval/errors.hpp"
#include "vseval/similarity.hpp"

using namespace vseval;
namespace tu = vseval::testutil;

TEST_SUITE("similarity") {

TEST_CASE("identical distributions score exactly one") {
  const std::vector<double> p = {0.25, 0.25, 0.25, 0.25};
  CHECK(bhattacharyya(p, p) == 1.0);
}

TEST_CASE("disjoint supports score zero") {
  const std::vector<double> p = {1.0, 0.0};
  const std::vector<double> q = {0.0, 1.0};
  CHECK(bhattacharyya(p, q) == 0.0);
}

TEST_CASE("hand-evaluated case (0.5,0.5) vs (0.9,0.1)") {
  const std::vector<double> p = {0.5, 0.5};
  const std::vector<double> q = {0.9, 0.1};
  // sqrt(0.45) + sqrt(0.05)
  CHECK(bhattacharyya(p, q) == doctest::Approx(0.894427190999916).epsilon(1e-12));
}

TEST_CASE("invalid inputs are rejected") {
  const std::vector<double> p = {0.5, 0.5};
  CHECK_THROWS_AS(bhattacharyya(p, std::vector<double>{1.0}), EvalError);
  CHECK_THROWS_AS(bhattacharyya(p, std::vector<double>{0.7, 0.6}), EvalError);
  CHECK_THROWS_AS(bhattacharyya(std::vector<double>{1.5, -0.5}, p), EvalError);
  CHECK_THROWS_AS(bhattacharyya(std::vector<double>{}, std::vector<double>{}), EvalError);
}

TEST_CASE("symmetry is exact and results stay in [0,1]") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> size_dist(2, 256);
  for (int round = 0; round < 2000; ++round) {
    const std::size_t n = size_dist(rng);
    const std::vector<double> p = tu::random_distribution(rng, n);
    const std::vector<double> q = tu::random_distribution(rng, n);
    const double pq = bhattacharyya(p, q);
    const double qp = bhattacharyya(q, p);
    CHECK(pq == qp);  // term-by-term commutative
    CHECK(pq >= 0.0);
    CHECK(pq <= 1.0);
  }
}

TEST_CASE("score one only for (near-)identical distributions") {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 2000; ++round) {
    const std::vector<double> p = tu::random_distribution(rng, 64);
    CHECK(bhattacharyya(p, p) == doctest::Approx(1.0).epsilon(1e-9));

    const std::vector<double> q = tu::random_distribution(rng, 64);
    double max_diff = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      max_diff = std::max(max_diff, std::abs(p[i] - q[i]));
    }
    if (max_diff > 1e-4) {
      CHECK(bhattacharyya(p, q) < 1.0 - 1e-9);
    }
  }
}

TEST_CASE("merging adjacent bins in both inputs leaves other contributions alone") {
  std::mt19937_64 rng(33);
  for (int round = 0; round < 500; ++round) {
    const std::vector<double> p = tu::random_distribution(rng, 32);
    const std::vector<double> q = tu::random_distribution(rng, 32);
    const std::size_t j = rng() % 31;

    std::vector<double> pm, qm;
    for (std::size_t i = 0; i < 32; ++i) {
      if (i == j) {
        pm.push_back(p[i] + p[i + 1]);
        qm.push_back(q[i] + q[i + 1]);
        ++i;
      } else {
        pm.push_back(p[i]);
        qm.push_back(q[i]);
      }
    }
    const double merged = bhattacharyya(pm, qm);
    const double expected = bhattacharyya(p, q) - std::sqrt(p[j] * q[j]) -
                            std::sqrt(p[j + 1] * q[j + 1]) +
                            std::sqrt((p[j] + p[j + 1]) * (q[j] + q[j + 1]));
    CHECK(merged == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("re-binning identical distributions keeps the score at one") {
  std::mt19937_64 rng(34);
  for (int round = 0; round < 200; ++round) {
    std::vector<double> p = tu::random_distribution(rng, 64);
    // merge random adjacent pairs a few times
    for (int merge = 0; merge < 5 && p.size() > 2; ++merge) {
      const std::size_t j = rng() % (p.size() - 1);
      p[j] += p[j + 1];
      p.erase(p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    }
    CHECK(bhattacharyya(p, p) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("match predicates honor the strict threshold") {
  EvalConfig cfg;
  ColorHistogram a;
  a.bins[0] = 1.0;
  CHECK(is_color_matched(a, a, cfg));  // score 1.0 > 0.97
  ColorHistogram b;
  b.bins[1] = 1.0;
  CHECK_FALSE(is_color_matched(a, b, cfg));  // score 0.0

  TextureDescriptor ta;
  ta.values[0] = 1.0;
  TextureDescriptor tb;
  tb.values[kTextureValues - 1] = 1.0;
  CHECK(is_texture_matched(ta, ta, cfg));
  CHECK_FALSE(is_texture_matched(ta, tb, cfg));
}

TEST_CASE("a pair scoring just above 0.97 is color-matched") {
  // two-bin histograms tuned near the paper's colliding-pair score
  ColorHistogram a;
  a.bins[0] = 0.9;
  a.bins[1] = 0.1;
  ColorHistogram b;
  b.bins[0] = 0.724;
  b.bins[1] = 0.276;
  const double score = bhattacharyya(a, b);
  CHECK(score == doctest::Approx(0.97335).epsilon(1e-4));
  EvalConfig cfg;
  CHECK(is_color_matched(a, b, cfg));
  cfg.color_threshold = 0.975;
  CHECK_FALSE(is_color_matched(a, b, cfg));
}

TEST_CASE("config validation rejects thresholds outside (0,1]") {
  EvalConfig cfg;
  cfg.color_threshold = 0.0;
  CHECK_THROWS_AS(cfg.validate(), EvalError);
  cfg.color_threshold = 1.5;
  CHECK_THROWS_AS(cfg.validate(), EvalError);
  cfg.color_threshold = 1.0;
  cfg.texture_threshold = -0.2;
  CHECK_THROWS_AS(cfg.validate(), EvalError);
  cfg.texture_threshold = 0.97;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("match mode names round-trip") {
  for (MatchMode mode : {MatchMode::color_and_texture, MatchMode::color_only,
                         MatchMode::texture_only, MatchMode::color_or_texture}) {
    CHECK(match_mode_from_name(match_mode_name(mode)) == mode);
  }
  CHECK_THROWS_AS(match_mode_from_name("bogus"), EvalError);
}

}  // TEST_SUITE
