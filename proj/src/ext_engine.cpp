#include "detcoh/ext_engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "detcoh/bott.hpp"
#include "detcoh/lattice_enum.hpp"

namespace detcoh {

namespace {

void require_equal_block(const Partition& x, int p, const Dimensions& dims) {
  if (x.length() != dims.n) throw std::invalid_argument("partition length must equal n");
  if (p < 0 || p > dims.n) throw std::invalid_argument("p out of range [0,n]");
  for (int i = 2; i <= p; ++i)
    if (x.row(i) != x.row(1))
      throw std::invalid_argument("x_1 = .. = x_p fails for x=" + x.to_string() + " p=" + std::to_string(p));
}

void chains_rec(TChain& cur, std::size_t j, int low, int cap, std::vector<TChain>& out) {
  if (j == cur.t.size()) {
    out.push_back(cur);
    return;
  }
  for (int v = low; v <= cap; ++v) {
    cur.t[j] = v;
    chains_rec(cur, j + 1, v, cap, out);
  }
}

// Raw per-coordinate bounds for lambda (index i-1 holds lambda_i) before
// dominance propagation.
struct WeightBounds {
  std::vector<int> lo;
  std::vector<int> hi;
};

WeightBounds compile_constraints(const Partition& x, const TChain& chain, const Dimensions& dims,
                                 const TruncationBox& box) {
  const int m = dims.m;
  const int n = dims.n;
  const int p = chain.p;
  WeightBounds b{std::vector<int>(static_cast<std::size_t>(n), box.lambda_low),
                 std::vector<int>(static_cast<std::size_t>(n), box.lambda_high)};
  auto lo = [&](int i) -> int& { return b.lo[static_cast<std::size_t>(i - 1)]; };
  auto hi = [&](int i) -> int& { return b.hi[static_cast<std::size_t>(i - 1)]; };

  // lambda_n >= p - x_p - m; vacuous for p = 0 (x_0 = +inf).
  if (p >= 1) lo(n) = std::max(lo(n), p - x.row(p) - m);
  for (int j = 1; j <= n - p; ++j) {
    const int k = chain.t_at(j) + j;
    const int v = chain.t_at(j) - x.row(n + 1 - j) - m;
    hi(k) = std::min(hi(k), v);
    if (chain.flavor == ChainFlavor::J) lo(k) = std::max(lo(k), v);
  }
  const int s = chain.s;
  if (s >= 1) lo(s) = std::max(lo(s), s - n);
  if (s + 1 <= n) hi(s + 1) = std::min(hi(s + 1), s - m);
  return b;
}

void enumerate_bounded(const WeightBounds& b, const std::optional<ZWindow>& window,
                       const std::function<void(const std::vector<int>&)>& fn) {
  enumerate_dominant(b.lo, b.hi, window, fn);
}

DominantWeight add_constant(const DominantWeight& w, int c) {
  std::vector<int> v(w.vec());
  for (auto& e : v) e += c;
  return DominantWeight(std::move(v));
}

}  // namespace

int TChain::t_sum() const { return std::accumulate(t.begin(), t.end(), 0); }

std::string TChain::to_string() const {
  std::string out = "p=" + std::to_string(p) + " s=" + std::to_string(s) + " t=(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

std::vector<TChain> enumerate_chains(int p, ChainFlavor flavor, const Dimensions& dims) {
  if (p < 0 || p > dims.n) throw std::invalid_argument("enumerate_chains: p out of range [0,n]");
  const int cap = flavor == ChainFlavor::J ? p : p - 1;
  std::vector<TChain> out;
  for (int s = 0; s <= cap; ++s) {
    TChain cur{p, s, std::vector<int>(static_cast<std::size_t>(dims.n - p)), flavor};
    chains_rec(cur, 0, s, cap, out);
  }
  return out;
}

int chain_wdegree(const TChain& chain, const Dimensions& dims) {
  const int base = dims.m * dims.n - chain.p * chain.p - chain.s * (dims.m - dims.n) - 2 * chain.t_sum();
  return chain.flavor == ChainFlavor::Quotient ? base + 1 : base;
}

bool in_weight_set(const DominantWeight& lambda, const Partition& x, const TChain& chain, const Dimensions& dims) {
  const int m = dims.m;
  const int n = dims.n;
  const int p = chain.p;
  if (lambda.length() != n) return false;
  if (p >= 1 && lambda.at(n) < p - x.row(p) - m) return false;
  for (int j = 1; j <= n - p; ++j) {
    const int value = lambda.at(chain.t_at(j) + j);
    const int bound = chain.t_at(j) - x.row(n + 1 - j) - m;
    if (chain.flavor == ChainFlavor::J ? value != bound : value > bound) return false;
  }
  return lambda_s_admissible(lambda.entries(), chain.s, dims);
}

std::vector<DominantWeight> enumerate_weights(const Partition& x, const TChain& chain, const Dimensions& dims,
                                              const TruncationBox& box) {
  if (chain.flavor == ChainFlavor::J) require_equal_block(x, chain.p, dims);
  std::vector<DominantWeight> out;
  enumerate_bounded(compile_constraints(x, chain, dims, box), box.z_window,
                    [&](const std::vector<int>& lam) { out.emplace_back(lam); });
  return out;
}

void for_each_ext_term_J(const Partition& x, int p, const Dimensions& dims, const TruncationBox& box,
                         const ExtTermFn& fn) {
  require_equal_block(x, p, dims);
  for (const auto& chain : enumerate_chains(p, ChainFlavor::J, dims))
    enumerate_bounded(compile_constraints(x, chain, dims, box), box.z_window,
                      [&](const std::vector<int>& lam) { fn(chain, DominantWeight(lam)); });
}

void for_each_ext_term_quotient(const Partition& x, const Dimensions& dims, const TruncationBox& box,
                                const ExtTermFn& fn, bool prune) {
  if (x.length() != dims.n) throw std::invalid_argument("partition length must equal n");
  for (int p = 1; p <= dims.n; ++p) {
    if (prune && p < dims.n && x.row(p) == x.row(p + 1)) continue;
    for (const auto& chain : enumerate_chains(p, ChainFlavor::Quotient, dims))
      enumerate_bounded(compile_constraints(x, chain, dims, box), box.z_window,
                        [&](const std::vector<int>& lam) { fn(chain, DominantWeight(lam)); });
  }
}

EquivariantCharacter ext_character_J(const Partition& x, int p, const Dimensions& dims, const TruncationBox& box) {
  EquivariantCharacter out(dims, box);
  for_each_ext_term_J(x, p, dims, box, [&](const TChain& chain, const DominantWeight& lambda) {
    out.add(embed_lambda_s(lambda, chain.s, dims), lambda, chain_wdegree(chain, dims));
  });
  return out;
}

EquivariantCharacter ext_character_quotient(const Partition& x, const Dimensions& dims, const TruncationBox& box,
                                            bool prune) {
  EquivariantCharacter out(dims, box);
  for_each_ext_term_quotient(
      x, dims, box,
      [&](const TChain& chain, const DominantWeight& lambda) {
        out.add(embed_lambda_s(lambda, chain.s, dims), lambda, chain_wdegree(chain, dims));
      },
      prune);
  return out;
}

TChain PipelineTrace::chain() const {
  return TChain{mu.length(), s, t, ChainFlavor::J};
}

std::optional<PipelineTrace> pipeline_forward(const DominantWeight& mu, int p, const Partition& x,
                                              const Dimensions& dims) {
  require_equal_block(x, p, dims);
  const int m = dims.m;
  const int n = dims.n;
  if (mu.length() != p) throw std::invalid_argument("pipeline_forward: mu must have length p");
  if (p >= 1 && mu.at(1) > -p) throw std::invalid_argument("pipeline_forward: needs mu_1 <= -p");

  PipelineTrace trace;
  trace.mu = mu;
  trace.t.assign(static_cast<std::size_t>(n - p), 0);
  DominantWeight cur = mu;
  for (int q = p; q <= n - 1; ++q) {
    // delta^(0) is the empty weight, so x_0 never enters.
    const DominantWeight delta = q >= 1 ? add_constant(cur, x.row(q) - x.row(q + 1)) : cur;
    trace.mus.push_back(cur);
    trace.deltas.push_back(delta);
    const BottStepResult step = pushforward_step(delta);
    if (step.vanishes()) return std::nullopt;
    trace.t[static_cast<std::size_t>(n - q - 1)] = step.shift();
    cur = step.weight();
  }
  const DominantWeight delta = add_constant(cur, x.row(n));
  trace.mus.push_back(cur);
  trace.deltas.push_back(delta);
  const auto s = grassmannian_index(delta, m);
  if (!s) return std::nullopt;
  trace.s = *s;
  const BottStepResult last = pushforward_final(delta, m);

  // Dualize after twisting by det(F)^n ⊗ det(G)^m.
  std::vector<int> lam(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) lam[static_cast<std::size_t>(i - 1)] = -m - delta.at(n + 1 - i);
  std::vector<int> alpha(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) alpha[static_cast<std::size_t>(i - 1)] = -n - last.weight().at(m + 1 - i);
  trace.lambda = DominantWeight(std::move(lam));
  trace.alpha = DominantWeight(std::move(alpha));
  if (trace.alpha != embed_lambda_s(trace.lambda, trace.s, dims))
    throw std::logic_error("pipeline_forward: F-side weight " + trace.alpha.to_string() + " is not lambda(s) for " +
                           trace.lambda.to_string());
  trace.cohomological_degree = m * n - p * p - trace.s * (m - n) -
                               2 * std::accumulate(trace.t.begin(), trace.t.end(), 0);
  return trace;
}

DominantWeight pipeline_inverse(const DominantWeight& lambda, const TChain& chain, const Partition& x,
                                const Dimensions& dims) {
  require_equal_block(x, chain.p, dims);
  if (chain.flavor != ChainFlavor::J) throw std::invalid_argument("pipeline_inverse expects a J chain");
  if (!in_weight_set(lambda, x, chain, dims))
    throw std::invalid_argument("pipeline_inverse: " + lambda.to_string() + " is not in W for " + chain.to_string());
  const int m = dims.m;
  const int n = dims.n;
  const int p = chain.p;
  auto delta = [&](int i) { return -m - lambda.at(n + 1 - i); };
  // Padded chain: t_0 = 0, t_{n-p+1} = p.
  std::vector<int> t(static_cast<std::size_t>(n - p + 2), 0);
  for (int j = 1; j <= n - p; ++j) t[static_cast<std::size_t>(j)] = chain.t_at(j);
  t[static_cast<std::size_t>(n - p + 1)] = p;

  // The original entries of mu received the full twist x_p and one +1 for each
  // of the n-p-i insertions placed in front of them.
  std::vector<int> mu(static_cast<std::size_t>(p));
  for (int i = 0; i <= n - p; ++i) {
    const int ti = t[static_cast<std::size_t>(i)];
    const int tnext = t[static_cast<std::size_t>(i + 1)];
    for (int j = 1; j <= tnext - ti; ++j)
      mu[static_cast<std::size_t>(p - tnext + j - 1)] = delta(n - i - tnext + j) - x.row(std::max(p, 1)) - (n - p - i);
  }
  return DominantWeight(std::move(mu));
}

EquivariantCharacter ext_character_J_oracle(const Partition& x, int p, const Dimensions& dims,
                                            const TruncationBox& box) {
  require_equal_block(x, p, dims);
  const int m = dims.m;
  const int n = dims.n;
  EquivariantCharacter out(dims, box);
  auto run = [&](const DominantWeight& mu) {
    auto trace = pipeline_forward(mu, p, x, dims);
    if (trace) out.add_if_in_box(trace->alpha, trace->lambda, trace->cohomological_degree);
  };
  if (p == 0) {
    run(DominantWeight{});
    return out;
  }
  const int low = -m - box.lambda_high - x.row(p) - (n - p);
  const int high = std::min(-p, -m - box.lambda_low);
  if (low > high) return out;
  std::vector<int> mu(static_cast<std::size_t>(p));
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int top) {
    if (i == mu.size()) {
      run(DominantWeight(mu));
      return;
    }
    for (int v = top; v >= low; --v) {
      mu[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, high);
  return out;
}

}  // namespace detcoh
