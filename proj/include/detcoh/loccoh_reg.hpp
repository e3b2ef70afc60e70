#pragma once

// Local cohomology H^•_{I_p}(S) with support in the ideal of p x p minors, the
// Gauss polynomials that count its cohomological spread, and the
// Castelnuovo-Mumford regularity of the ideals I_x.

#include <map>
#include <string>
#include <utility>

#include "detcoh/character.hpp"
#include "detcoh/weights.hpp"

namespace detcoh {

/// Laurent polynomial in one variable w with exact integer coefficients.
class WPolynomial {
 public:
  WPolynomial() = default;
  static WPolynomial monomial(int exponent, BigInt coeff = 1);

  const std::map<int, BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int exponent) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest exponent; the polynomial must be nonzero.
  int degree() const;
  int low_degree() const;

  void add(int exponent, const BigInt& coeff);
  WPolynomial operator+(const WPolynomial& o) const;
  WPolynomial operator*(const WPolynomial& o) const;
  /// f(w) -> f(w^k).
  WPolynomial substitute_power(int k) const;
  /// f(w) -> w^k f(w).
  WPolynomial shifted(int k) const;

  std::string to_string() const;
  bool operator==(const WPolynomial&) const = default;

 private:
  std::map<int, BigInt> coeffs_;  // no zero entries
};

/// {a+b choose a}(w) = sum over b >= t_1 >= .. >= t_a >= 0 of w^(t_1+..+t_a).
WPolynomial gauss_polynomial(int a, int b);

/// Number of partitions of c with at most a parts, each at most b, by direct
/// enumeration.
BigInt count_partitions_in_box(int a, int b, int c);

/// Terms [S_{lambda(s)}F ⊗ S_lambda G] z^|lambda| over dominant lambda in the box
/// with lambda_s >= s-n and lambda_{s+1} <= s-m, all placed at `wdeg`.
EquivariantCharacter h_s_character(int s, const Dimensions& dims, const TruncationBox& box, int wdeg = 0);

/// Character of H^•_{I_p}(S): sum over s < p of h_s times
/// w^((n-p+1)^2 + (n-s)(m-n)) {n-s-1 choose p-s-1}(w^2).
EquivariantCharacter local_cohomology_character(int p, const Dimensions& dims, const TruncationBox& box);

/// (depth, cohomological dimension) = ((m-p+1)(n-p+1), mn-p^2+1).
std::pair<int, int> cohomological_range(int p, const Dimensions& dims);

struct RegularityResult {
  int regularity = 0;
  /// Smallest p attaining the maximum.
  int witness_p = 0;
};

/// reg(I_x) = max over p with x_p > x_{p+1} (x_{n+1} = -1) of n x_p + (p-2)(n-p).
/// Throws std::invalid_argument for the zero partition.
RegularityResult regularity(const Partition& x, const Dimensions& dims);

/// reg(I_x) from the cells (p, s, t) of the Ext(S/I_x) formula: each nonempty
/// cell contributes its minimal-size weight, giving
/// -|lambda| - mn + p^2 + s(m-n) + 2 sum t. Does not use the closed formula.
int regularity_oracle(const Partition& x, const Dimensions& dims);

/// Nonemptiness of W'(x,p;t,s): x_p - x_{n+1-j} >= p - t_j for all j and s >= p - x_p.
bool quotient_cell_nonempty(const Partition& x, int p, int s, const std::vector<int>& t, const Dimensions& dims);

/// A box on which the Ext(S/I_x) character contains every minimal-size weight:
/// beta entries in [min(-n, min_p(p - x_p) - m), 0].
TruncationBox regularity_box(const Partition& x, const Dimensions& dims);

/// 1 + max(-z - w) over the terms of an Ext(S/I_x) character.
int regularity_from_character(const EquivariantCharacter& ext_quotient);

/// True iff reg(I_x) = |x|, the degree of the generators.
bool has_linear_resolution(const Partition& x, const Dimensions& dims);

}  // namespace detcoh
