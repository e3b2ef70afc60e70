#include <doctest.h>

#include "detcoh/character.hpp"
#include "detcoh/ext_engine.hpp"

using namespace detcoh;

namespace {

// Monomials of degree r in k variables, by the recursion on the last exponent.
BigInt monomial_count(int k, int r) {
  std::vector<BigInt> row(r + 1, 0);
  row[0] = 1;
  for (int var = 0; var < k; ++var)
    for (int deg = 1; deg <= r; ++deg) row[deg] += row[deg - 1];
  return row[r];
}

DominantWeight W(std::initializer_list<int> e) { return DominantWeight(e); }

}  // namespace

TEST_CASE("truncation boxes") {
  const TruncationBox box(-3, 1, ZWindow{-4, 0});
  CHECK(box.contains(W({1, -3})));
  CHECK_FALSE(box.contains(W({1, -4})));
  CHECK_FALSE(box.contains(W({1, 1})));
  CHECK(TruncationBox(-2, 0).inside(TruncationBox(-3, 1)));
  CHECK_FALSE(TruncationBox(-4, 0).inside(TruncationBox(-3, 1)));
  CHECK_THROWS_AS(TruncationBox(0, 1).intersect(TruncationBox(3, 4)), std::invalid_argument);
  CHECK(TruncationBox(-3, 1).intersect(TruncationBox(-1, 5)) == TruncationBox(-1, 1));
}

TEST_CASE("adding terms checks shapes, sizes and the box") {
  const auto d = Dimensions::make(2, 1);
  EquivariantCharacter c(d, TruncationBox(-3, 0));
  c.add(W({-1, -1}), W({-2}), 1);
  c.add(W({-1, -1}), W({-2}), 1);
  CHECK(c.multiplicity(W({-1, -1}), W({-2}), 1) == 2);
  CHECK(c.terms().begin()->first.zdeg == -2);
  CHECK_THROWS_AS(c.add(W({-1}), W({-1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(c.add(W({0, -1}), W({-2}), 0), std::invalid_argument);
  CHECK_THROWS_AS(c.add(W({-2, -2}), W({-4}), 0), std::invalid_argument);
  CHECK_FALSE(c.add_if_in_box(W({-2, -2}), W({-4}), 0));
  CHECK_THROWS_AS(c.add(W({-1, -1}), W({-2}), 1, -3), std::domain_error);
}

TEST_CASE("combine and comparisons") {
  const auto d = Dimensions::make(2, 1);
  EquivariantCharacter a(d, TruncationBox(-3, 0));
  a.add(W({-1, -1}), W({-2}), 1);
  a.add(W({-1, -2}), W({-3}), 1, 2);
  EquivariantCharacter b(d, TruncationBox(-2, 2));
  b.add(W({-1, -1}), W({-2}), 1);
  b.add(W({1, 0}), W({1}), 0);

  CHECK(equal_on_box(combine(a, b, 1, 0), a.restricted(b.box())));
  CHECK(combine(a, a, 1, -1).empty());
  CHECK(equal_on_box(combine(a, b, 1, 1), combine(b, a, 1, 1)));
  CHECK(combine(a, b, 1, 1).box() == TruncationBox(-2, 0));
  CHECK_THROWS_AS(combine(a, b, 0, -1), std::domain_error);
  CHECK(equal_on_box(a, a));
  CHECK(equal_on_box(a, b));  // they agree on [-2,0]
  CHECK(dominated_on_box(a, combine(a, a, 1, 1)));
  CHECK_FALSE(dominated_on_box(combine(a, a, 1, 1), a));

  EquivariantCharacter c = a;
  c.add(W({-1, -1}), W({-2}), 1);
  CHECK_FALSE(equal_on_box(a, c));
  REQUIRE(first_difference(a, c).has_value());
  CHECK(first_difference(a, c)->find("mult 1 vs 2") != std::string::npos);
  CHECK_FALSE(first_difference(a, a).has_value());
}

TEST_CASE("Cauchy character") {
  const auto c = cauchy_character(Dimensions::make(2, 2), ZWindow{0, 1});
  CHECK(c.size() == 2);
  CHECK(c.multiplicity(W({0, 0}), W({0, 0}), 0) == 1);
  CHECK(c.multiplicity(W({1, 0}), W({1, 0}), 0) == 1);
  CHECK(cauchy_character(Dimensions::make(2, 2), ZWindow{0, 0}).size() == 1);
  CHECK(cauchy_character(Dimensions::make(3, 2), ZWindow{2, 2}).size() == 2);
  CHECK(dimension_slice(cauchy_character(Dimensions::make(2, 2), ZWindow{0, 3}), 0).at(2).dimension == 10);
}

TEST_CASE("Cauchy dimensions count monomials") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const auto slice = dimension_slice(cauchy_character(Dimensions::make(m, n), ZWindow{0, 6}), 0);
      for (int r = 0; r <= 6; ++r) {
        CHECK(slice.at(r).dimension == monomial_count(m * n, r));
        CHECK_FALSE(slice.at(r).lower_bound_only);
      }
    }
  }
}

TEST_CASE("dimension slices") {
  const auto d = Dimensions::make(2, 1);
  CHECK(dimension_slice(EquivariantCharacter(d, TruncationBox(-3, 0)), 0).empty());
  const auto ext = ext_character_J(Partition({2}, 1), 1, d, TruncationBox(-6, 0));
  const auto slice = dimension_slice(ext, 1);
  CHECK(slice.at(-2).dimension == 1);
  CHECK(slice.at(-3).dimension == 2);
  CHECK(slice.size() == 2);
  const auto quotient = dimension_slice(ext_character_quotient(Partition({2}, 1), d, TruncationBox(-6, 0)), 2);
  CHECK(quotient.at(-2).dimension == 1);
}

TEST_CASE("every term has |alpha| = |beta| = z") {
  const auto d = Dimensions::make(3, 2);
  const auto c = ext_character_quotient(Partition({2, 1}, 2), d, TruncationBox(-7, 2));
  CHECK_FALSE(c.empty());
  for (const auto& [key, mult] : c.terms()) {
    CHECK(weight_size(key.alpha) == key.zdeg);
    CHECK(weight_size(key.beta) == key.zdeg);
    CHECK(mult > 0);
  }
}
