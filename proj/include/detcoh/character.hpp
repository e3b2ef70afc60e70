#pragma once

// Bigraded GL(F) x GL(G) characters: finite multisets of irreducibles
// S_alpha F ⊗ S_beta G placed at z-degree |beta| and a cohomological w-degree.
//
// A character is always materialized on a TruncationBox. Its contract is that
// every term of the true (possibly infinite) character whose beta lies in the
// box is present with the right multiplicity.

#include <map>
#include <optional>
#include <string>

#include "detcoh/weights.hpp"

namespace detcoh {

struct IrrepPair {
  DominantWeight alpha;  // length m
  DominantWeight beta;   // length n
  bool operator==(const IrrepPair&) const = default;
};

struct TruncationBox {
  int lambda_low = 0;
  int lambda_high = 0;
  std::optional<ZWindow> z_window;

  TruncationBox() = default;
  TruncationBox(int low, int high, std::optional<ZWindow> window = std::nullopt);

  bool contains(const DominantWeight& beta) const;
  /// Throws std::invalid_argument when the boxes do not overlap.
  TruncationBox intersect(const TruncationBox& other) const;
  /// True when every weight accepted by `this` is accepted by `outer`.
  bool inside(const TruncationBox& outer) const;

  bool operator==(const TruncationBox&) const = default;
};

/// Map key; the ordering (wdeg, zdeg, alpha, beta) is the output order.
struct TermKey {
  int wdeg = 0;
  long long zdeg = 0;
  DominantWeight alpha;
  DominantWeight beta;
  auto operator<=>(const TermKey&) const = default;
  bool operator==(const TermKey&) const = default;
};

class EquivariantCharacter {
 public:
  using TermMap = std::map<TermKey, BigInt>;

  EquivariantCharacter(Dimensions dims, TruncationBox box) : dims_(dims), box_(box) {}

  /// Adds a term. Throws std::invalid_argument when the shapes are wrong, when
  /// |alpha| != |beta|, or when beta lies outside the box; throws
  /// std::domain_error when a multiplicity would become negative.
  void add(const DominantWeight& alpha, const DominantWeight& beta, int wdeg, const BigInt& mult = 1);
  /// Adds only if beta lies inside the box; returns whether it did.
  bool add_if_in_box(const DominantWeight& alpha, const DominantWeight& beta, int wdeg, const BigInt& mult = 1);

  const TermMap& terms() const { return terms_; }
  const Dimensions& dims() const { return dims_; }
  const TruncationBox& box() const { return box_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Multiplicity of a term, zero when absent.
  BigInt multiplicity(const DominantWeight& alpha, const DominantWeight& beta, int wdeg) const;

  /// z-degrees at which every contribution is known to lie inside the box, so
  /// that dimension counts there are exact rather than lower bounds.
  const std::optional<ZWindow>& complete_z() const { return complete_z_; }
  void set_complete_z(std::optional<ZWindow> w) { complete_z_ = w; }

  /// The same character on a smaller box.
  EquivariantCharacter restricted(const TruncationBox& box) const;

 private:
  Dimensions dims_;
  TruncationBox box_;
  TermMap terms_;
  std::optional<ZWindow> complete_z_;
};

/// coeff_a * a + coeff_b * b on the intersection of the two boxes. A negative
/// resulting multiplicity throws std::domain_error.
EquivariantCharacter combine(const EquivariantCharacter& a, const EquivariantCharacter& b, long long coeff_a,
                             long long coeff_b);

/// Exact comparison of the restrictions to the intersected box.
bool equal_on_box(const EquivariantCharacter& a, const EquivariantCharacter& b);

/// Coefficientwise a <= b on the intersected box.
bool dominated_on_box(const EquivariantCharacter& a, const EquivariantCharacter& b);

/// First term where the two restrictions differ, for diagnostics.
std::optional<std::string> first_difference(const EquivariantCharacter& a, const EquivariantCharacter& b);

struct SliceValue {
  BigInt dimension;
  bool lower_bound_only = true;
  bool operator==(const SliceValue&) const = default;
};

/// z-degree -> sum of mult * dim S_alpha F * dim S_beta G at one w-degree.
std::map<long long, SliceValue> dimension_slice(const EquivariantCharacter& c, int wdeg);

/// Sym(F ⊗ G) = sum over partitions x of S_x F ⊗ S_x G, for |x| in the window.
/// Requires 0 <= window.lo.
EquivariantCharacter cauchy_character(const Dimensions& dims, ZWindow window);

}  // namespace detcoh
