#pragma once

// The lattice of GL-equivariant ideals I_x of S = Sym(F ⊗ G). The ring is never
// materialized: I_x is spanned by the irreducibles S_yF ⊗ S_yG with x ⊂ y, so an
// ideal is the upward-closed set of partitions generated by an antichain.

#include <optional>
#include <vector>

#include "detcoh/weights.hpp"

namespace detcoh {

/// Upward-closed set of partitions given by its minimal generators.
class PartitionIdeal {
 public:
  /// The zero ideal.
  explicit PartitionIdeal(Dimensions dims) : dims_(dims) {}

  const std::vector<Partition>& generators() const { return generators_; }
  const Dimensions& dims() const { return dims_; }
  bool is_zero() const { return generators_.empty(); }

  bool operator==(const PartitionIdeal& o) const {
    return dims_ == o.dims_ && generators_ == o.generators_;
  }

 private:
  friend PartitionIdeal ideal_from_generators(const std::vector<Partition>&, const Dimensions&);
  Dimensions dims_;
  std::vector<Partition> generators_;  // sorted, pairwise incomparable
};

/// J_{x,p} = I_x / I_{Succ(x,p)}; requires x_1 = .. = x_p.
struct SubquotientSpec {
  Partition x;
  int p = 0;

  /// Throws std::invalid_argument if p is outside [0,n] or x_1 = .. = x_p fails.
  void validate() const;
  bool operator==(const SubquotientSpec&) const = default;
  auto operator<=>(const SubquotientSpec&) const = default;
};

/// I_T for a finite set T: drops every generator that contains another one.
PartitionIdeal ideal_from_generators(const std::vector<Partition>& gens, const Dimensions& dims);

/// The principal ideal I_x.
PartitionIdeal principal_ideal(const Partition& x, const Dimensions& dims);

bool member(const PartitionIdeal& ideal, const Partition& y);

/// I ∩ J, generated by the pairwise joins of generators.
PartitionIdeal intersect(const PartitionIdeal& a, const PartitionIdeal& b);

/// I + J.
PartitionIdeal sum(const PartitionIdeal& a, const PartitionIdeal& b);

/// I_{Succ(x,p)} where Succ(x,p) = {y ⊇ x : y_i > x_i for some i > p}.
/// Its minimal generators are max(x, ((x_i+1)^i)) for i = p+1..n, minimalized.
PartitionIdeal succ_ideal(const Partition& x, int p, const Dimensions& dims);

/// Partitions y (at most n rows) indexing S_yF ⊗ S_yG in the module, |y| in the
/// window, sorted by (|y|, y).
std::vector<Partition> graded_support(const PartitionIdeal& ideal, ZWindow window);
std::vector<Partition> graded_support(const SubquotientSpec& spec, const Dimensions& dims, ZWindow window);

/// The subquotients J_{z,p} in the filtration of I_x / I_y with
/// y = max(x, (x_1+d+1)^(p+1)): every z with x_1 <= z_1 = .. = z_{p+1} <= x_1+d and
/// z_i >= x_i for i > p+1. The set is finite because z_i <= z_1; `max_part`
/// optionally clips it further to z_1 <= max_part. Requires x_1 = .. = x_{p+1}
/// and 0 <= p <= n-1.
std::vector<SubquotientSpec> filtration_quotients(const Partition& x, int p, int d, const Dimensions& dims,
                                                  std::optional<int> max_part = std::nullopt);

}  // namespace detcoh
