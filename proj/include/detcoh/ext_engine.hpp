#pragma once

// Characters of Ext^•_S(J_{x,p}, S) and Ext^•_S(S/I_x, S).
//
// Two independent routes:
//  * closed form: enumerate index chains 0 <= s <= t_1 <= .. <= t_{n-p} and the
//    dominant weights lambda cut out by linear constraints (`enumerate_weights`);
//  * constructive: start from every weight mu of Sym(eta^*) ⊗ det(eta^*) on the
//    flag variety X^(p), twist, and push forward one projection at a time with
//    the Bott rules (`pipeline_forward`).
// `ext_character_J_oracle` assembles the second route into a character.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "detcoh/character.hpp"
#include "detcoh/weights.hpp"

namespace detcoh {

/// Which weight set the chain indexes: W (equalities, t_{n-p} <= p) for the
/// subquotients J_{x,p}, or W' (inequalities, t_{n-p} <= p-1) for S/I_x.
enum class ChainFlavor { J, Quotient };

struct TChain {
  int p = 0;
  int s = 0;
  std::vector<int> t;  // t_1 <= .. <= t_{n-p}, stored 0-based
  ChainFlavor flavor = ChainFlavor::J;

  int t_sum() const;
  /// 1-based t_j.
  int t_at(int j) const { return t[static_cast<std::size_t>(j - 1)]; }
  std::string to_string() const;
  bool operator==(const TChain&) const = default;
};

/// All chains for the given p and flavor, in lexicographic (s, t) order.
std::vector<TChain> enumerate_chains(int p, ChainFlavor flavor, const Dimensions& dims);

/// Cohomological degree of the terms indexed by a chain:
/// mn - p^2 - s(m-n) - 2 sum t (+1 for the Quotient flavor).
int chain_wdegree(const TChain& chain, const Dimensions& dims);

/// Membership of lambda in W(x,p;t,s) or W'(x,p;t,s) according to the flavor.
bool in_weight_set(const DominantWeight& lambda, const Partition& x, const TChain& chain, const Dimensions& dims);

/// Every lambda of the chain's weight set inside the box, lexicographically
/// decreasing. Requires x_1 = .. = x_p for the J flavor.
std::vector<DominantWeight> enumerate_weights(const Partition& x, const TChain& chain, const Dimensions& dims,
                                              const TruncationBox& box);

/// Calls `fn(chain, lambda)` for every term of the closed form. For the J flavor
/// `p` is fixed; for the Quotient flavor all p in [1,n] are visited, skipping
/// p < n with x_p = x_{p+1} when `prune` is set (those contribute nothing).
using ExtTermFn = std::function<void(const TChain&, const DominantWeight&)>;
void for_each_ext_term_J(const Partition& x, int p, const Dimensions& dims, const TruncationBox& box,
                         const ExtTermFn& fn);
void for_each_ext_term_quotient(const Partition& x, const Dimensions& dims, const TruncationBox& box,
                                const ExtTermFn& fn, bool prune = true);

/// Ext^•(J_{x,p}, S) from the closed form.
EquivariantCharacter ext_character_J(const Partition& x, int p, const Dimensions& dims, const TruncationBox& box);

/// Ext^•(S/I_x, S) from the closed form.
EquivariantCharacter ext_character_quotient(const Partition& x, const Dimensions& dims, const TruncationBox& box,
                                            bool prune = true);

/// Intermediate data of one pass through the projections X^(p) -> .. -> X^(n) -> pt.
struct PipelineTrace {
  DominantWeight mu;                  // starting weight, length p, mu_1 <= -p
  std::vector<DominantWeight> mus;    // mu^(q), q = p..n
  std::vector<DominantWeight> deltas; // delta^(q) = mu^(q) + (x_q - x_{q+1})^q, q = p..n
  std::vector<int> t;                 // t_1..t_{n-p}; t_{n-q} is chosen at stage q
  int s = 0;
  DominantWeight lambda;              // lambda_i = -m - delta^(n)_{n+1-i}
  DominantWeight alpha;               // F-side weight, equals lambda(s)
  int cohomological_degree = 0;

  TChain chain() const;
};

/// Runs the twist/push-forward recursion. Returns nullopt when some stage
/// vanishes. Throws std::invalid_argument if mu is not of length p with
/// mu_1 <= -p or x_1 = .. = x_p fails.
std::optional<PipelineTrace> pipeline_forward(const DominantWeight& mu, int p, const Partition& x,
                                              const Dimensions& dims);

/// The starting weight mu that `pipeline_forward` maps to (lambda, chain).
/// Throws std::invalid_argument when lambda is not in W(x,p;t,s).
DominantWeight pipeline_inverse(const DominantWeight& lambda, const TChain& chain, const Partition& x,
                                const Dimensions& dims);

/// Ext^•(J_{x,p}, S) by running `pipeline_forward` over every candidate mu that
/// can land in the box. Each entry of mu survives to delta^(n) shifted by
/// between 0 and x_p + (n-p), which bounds the search.
EquivariantCharacter ext_character_J_oracle(const Partition& x, int p, const Dimensions& dims,
                                            const TruncationBox& box);

}  // namespace detcoh
