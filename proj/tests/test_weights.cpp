#include <doctest.h>

#include <functional>
#include <random>

#include "detcoh/lattice_enum.hpp"
#include "detcoh/weights.hpp"

using namespace detcoh;

namespace {

// Number of Gelfand-Tsetlin patterns with top row lambda: each row interlaces
// the one above it. Equals the dimension of the GL_N irreducible.
long long gelfand_tsetlin_count(const std::vector<int>& top) {
  if (top.size() <= 1) return 1;
  long long total = 0;
  std::vector<int> row(top.size() - 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == row.size()) {
      total += gelfand_tsetlin_count(row);
      return;
    }
    for (int v = top[i + 1]; v <= top[i]; ++v) {
      row[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

}  // namespace

TEST_CASE("normalize drops trailing zeros and keeps the ambient length") {
  const auto x = normalize(std::vector<int>{5, 2, 1, 0, 0}, 5);
  CHECK(x.parts().size() == 3);
  CHECK(x.length() == 5);
  CHECK(x == Partition({5, 2, 1}, 5));
  CHECK(normalize(std::vector<int>{}, 3).is_zero());
  CHECK(normalize(std::vector<int>{3, 3}, 2) == Partition({3, 3}, 2));
  CHECK(x.row(4) == 0);
  CHECK(x.row(6) == 0);
  CHECK(x.size() == 8);
}

TEST_CASE("normalize reports the offending position") {
  try {
    normalize(std::vector<int>{3, 1, 2}, 3);
    FAIL("no exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
  CHECK_THROWS_AS(normalize(std::vector<int>{2, -1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(normalize(std::vector<int>{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("containment and join") {
  CHECK(contains(Partition({1, 1}, 2), Partition({2, 1}, 2)));
  CHECK_FALSE(contains(Partition({3}, 2), Partition({2, 2}, 2)));
  CHECK(contains(Partition({5, 5, 5, 3}, 4), Partition({10, 7, 5, 3}, 4)));
  CHECK(join(Partition({3}, 2), Partition({1, 1}, 2)) == Partition({3, 1}, 2));
  CHECK(join(Partition({2, 1}, 2), Partition({2, 1}, 2)) == Partition({2, 1}, 2));
  CHECK(join(Partition({2, 2}, 3), Partition({4, 4}, 3)) == Partition({4, 4}, 3));
}

TEST_CASE("dominant weights reject increasing entries") {
  CHECK_THROWS_AS(DominantWeight({1, 2}), std::invalid_argument);
  CHECK(DominantWeight({-1, -1, -4}).at(3) == -4);
  CHECK(DominantWeight::from_partition(Partition({2}, 3), 3) == DominantWeight({2, 0, 0}));
}

TEST_CASE("dimensions are normalized to m >= n") {
  const auto d = Dimensions::make(2, 3);
  CHECK(d.m == 3);
  CHECK(d.n == 2);
  CHECK(d.transposed);
  CHECK_FALSE(Dimensions::make(3, 2).transposed);
  CHECK_THROWS_AS(Dimensions::make(0, 2), std::invalid_argument);
}

TEST_CASE("lambda(s) embedding") {
  const auto d = Dimensions::make(3, 2);
  CHECK(embed_lambda_s(DominantWeight({-3, -4}), 0, d) == DominantWeight({-2, -2, -3}));
  CHECK(embed_lambda_s(DominantWeight({3, 1}), 2, d) == DominantWeight({3, 1, 0}));
  CHECK(embed_lambda_s(DominantWeight({0, -3}), 1, d) == DominantWeight({0, -1, -2}));
  CHECK_FALSE(lambda_s_admissible(std::vector<int>{0, 0}, 1, d));
  CHECK_THROWS_AS(embed_lambda_s(DominantWeight({0, 0}), 1, d), std::invalid_argument);
}

TEST_CASE("lambda(s) is dominant exactly when admissible for m > n, unique s for m = n") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= m; ++n) {
      const auto d = Dimensions::make(m, n);
      enumerate_dominant(std::vector<int>(n, -m - 3), std::vector<int>(n, 2), std::nullopt,
                         [&](const std::vector<int>& v) {
                           int admissible = 0;
                           for (int s = 0; s <= n; ++s) {
                             std::vector<int> raw(v.begin(), v.begin() + s);
                             raw.insert(raw.end(), m - n, s - n);
                             for (int i = s; i < n; ++i) raw.push_back(v[i] + m - n);
                             if (m > n) CHECK(DominantWeight::is_dominant(raw) == lambda_s_admissible(v, s, d));
                             if (lambda_s_admissible(v, s, d)) ++admissible;
                             if (lambda_s_admissible(v, s, d)) {
                               const auto e = embed_lambda_s(DominantWeight(v), s, d);
                               CHECK(weight_size(e) == weight_size(v));
                             }
                           }
                           CHECK(admissible <= 1);
                           if (m == n) CHECK(admissible == 1);
                         });
    }
  }
}

TEST_CASE("weight sizes") {
  CHECK(weight_size(DominantWeight({5, 2, 1})) == 8);
  CHECK(weight_size(DominantWeight({0, 0})) == 0);
  CHECK(weight_size(DominantWeight({-1, -2})) == -3);
}

TEST_CASE("Weyl dimension examples") {
  CHECK(weyl_dimension(DominantWeight({-1, -2})) == 2);
  CHECK(weyl_dimension(DominantWeight({0, 0, 0})) == 1);
  for (int r = 0; r <= 8; ++r) CHECK(weyl_dimension(DominantWeight({r, 0})) == r + 1);
}

TEST_CASE("Weyl dimension agrees with Gelfand-Tsetlin pattern counts") {
  for (int N = 1; N <= 4; ++N) {
    enumerate_dominant(std::vector<int>(N, -3), std::vector<int>(N, 3), std::nullopt,
                       [&](const std::vector<int>& v) {
                         CHECK(weyl_dimension(DominantWeight(v)) == gelfand_tsetlin_count(v));
                       });
  }
}

TEST_CASE("enumerate_dominant matches a filtered hypercube") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int len = 1 + static_cast<int>(rng() % 4);
    std::vector<int> lo(len), hi(len);
    for (int i = 0; i < len; ++i) {
      lo[i] = -4 + static_cast<int>(rng() % 5);
      hi[i] = lo[i] + static_cast<int>(rng() % 6) - 1;
    }
    std::optional<ZWindow> window;
    if (rng() % 2) window = ZWindow{-6 + static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)};

    std::vector<std::vector<int>> expected;
    std::vector<int> cur(len);
    std::function<void(int)> cube = [&](int i) {
      if (i == len) {
        if (!DominantWeight::is_dominant(cur)) return;
        if (window && !window->contains(weight_size(cur))) return;
        expected.push_back(cur);
        return;
      }
      for (int v = -4; v <= 6; ++v) {
        if (v < lo[i] || v > hi[i]) continue;
        cur[i] = v;
        cube(i + 1);
      }
    };
    cube(0);
    std::sort(expected.rbegin(), expected.rend());

    std::vector<std::vector<int>> got;
    enumerate_dominant(lo, hi, window, [&](const std::vector<int>& v) { got.push_back(v); });
    CHECK(got == expected);
  }
}
