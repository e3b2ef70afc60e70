#pragma once

// Push-forwards of Schur functor bundles along the two kinds of partial flag
// projections used by the Ext computation: forgetting the smallest quotient of a
// flag (a projective bundle, `pushforward_step`) and collapsing a Grassmannian of
// n-dimensional quotients of a d-dimensional space to a point (`pushforward_final`).
//
// `rho_sort_oracle` is the generic dotted Weyl action and shares no code with
// the piecewise rules; the two are compared in the tests.

#include <optional>
#include <string>
#include <vector>

#include "detcoh/weights.hpp"

namespace detcoh {

struct BottStepResult {
  /// Empty when every higher direct image vanishes.
  struct Nonzero {
    int shift = 0;  // cohomological degree carrying the nonzero image
    DominantWeight weight;
    bool operator==(const Nonzero&) const = default;
  };
  std::optional<Nonzero> value;

  bool vanishes() const { return !value.has_value(); }
  int shift() const { return value->shift; }
  const DominantWeight& weight() const { return value->weight; }

  static BottStepResult vanishing() { return {}; }
  static BottStepResult nonzero(int shift, DominantWeight w) { return {Nonzero{shift, std::move(w)}}; }

  std::string to_string() const;
  bool operator==(const BottStepResult&) const = default;
};

/// Projective bundle step for a dominant weight mu of length q >= 0.
/// Vanishes iff mu_{q-t} + t = -1 for some t in [0, q-1]; otherwise finds the
/// unique t with mu_{q-t+1}+t+1 <= 0 <= mu_{q-t}+t and returns shift t and
/// (mu_1..mu_{q-t}, -t, mu_{q-t+1}+1, .., mu_q+1) of length q+1.
BottStepResult pushforward_step(const DominantWeight& mu);

/// Grassmannian step for dominant mu of length n and ambient dimension d >= n.
/// Vanishes iff n-d <= mu_{n-s}+s <= -1 for some s in [0, n-1]; otherwise finds
/// the unique s with mu_{n-s} >= -s and mu_{n-s+1} <= -s-d+n and returns shift
/// s*(d-n) and (mu_1..mu_{n-s}, (-s)^(d-n), mu_{n-s+1}+(d-n), .., mu_n+(d-n)).
BottStepResult pushforward_final(const DominantWeight& mu, int d);

/// The index s selected by `pushforward_final`, or nullopt when it vanishes.
/// Needed separately because the shift s*(d-n) does not determine s when d = n.
std::optional<int> grassmannian_index(const DominantWeight& mu, int d);

/// Same answer as the two rules above, computed by adding rho = (N-1, .., 0),
/// sorting with an inversion count, and subtracting rho. Any integer tuple.
BottStepResult rho_sort_oracle(const std::vector<int>& weight);

}  // namespace detcoh
