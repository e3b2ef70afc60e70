#include "detcoh/loccoh_reg.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "detcoh/ext_engine.hpp"
#include "detcoh/lattice_enum.hpp"

namespace detcoh {

WPolynomial WPolynomial::monomial(int exponent, BigInt coeff) {
  WPolynomial out;
  out.add(exponent, coeff);
  return out;
}

BigInt WPolynomial::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

int WPolynomial::degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

int WPolynomial::low_degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
  return coeffs_.begin()->first;
}

void WPolynomial::add(int exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto& slot = coeffs_[exponent];
  slot += coeff;
  if (slot == 0) coeffs_.erase(exponent);
}

WPolynomial WPolynomial::operator+(const WPolynomial& o) const {
  WPolynomial out(*this);
  for (const auto& [e, c] : o.coeffs_) out.add(e, c);
  return out;
}

WPolynomial WPolynomial::operator*(const WPolynomial& o) const {
  WPolynomial out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) out.add(e1 + e2, c1 * c2);
  return out;
}

WPolynomial WPolynomial::substitute_power(int k) const {
  if (k <= 0) throw std::invalid_argument("substitute_power needs a positive exponent");
  WPolynomial out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e * k, c);
  return out;
}

WPolynomial WPolynomial::shifted(int k) const {
  WPolynomial out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
  return out;
}

std::string WPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    if (e != 0) out += "*w^" + std::to_string(e);
  }
  return out;
}

WPolynomial gauss_polynomial(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("gauss_polynomial needs a, b >= 0");
  // level[v] = sum over v >= t_k >= .. >= t_a >= 0 of w^(t_k + .. + t_a).
  std::vector<WPolynomial> level(static_cast<std::size_t>(b + 1), WPolynomial::monomial(0));
  for (int k = 0; k < a; ++k) {
    std::vector<WPolynomial> next(static_cast<std::size_t>(b + 1));
    WPolynomial running;
    for (int v = 0; v <= b; ++v) {
      running = running + level[static_cast<std::size_t>(v)].shifted(v);
      next[static_cast<std::size_t>(v)] = running;
    }
    level = std::move(next);
  }
  return level[static_cast<std::size_t>(b)];
}

BigInt count_partitions_in_box(int a, int b, int c) {
  if (a < 0 || b < 0) throw std::invalid_argument("count_partitions_in_box needs a, b >= 0");
  if (c < 0) return 0;
  // Walk every partition of c with parts <= b and count those with <= a parts.
  BigInt count = 0;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      if (static_cast<int>(parts.size()) <= a) ++count;
      return;
    }
    const long long slots = a - static_cast<long long>(parts.size());
    if (slots <= 0 || remaining > slots * max_part) return;
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
      parts.push_back(v);
      rec(remaining - v, v);
      parts.pop_back();
    }
  };
  rec(c, b);
  return count;
}

namespace {

void for_each_h_s(int s, const Dimensions& dims, const TruncationBox& box,
                  const std::function<void(const DominantWeight&)>& fn) {
  const int n = dims.n;
  if (s < 0 || s > n) throw std::invalid_argument("h_s: s out of range [0,n]");
  std::vector<int> lo(static_cast<std::size_t>(n), box.lambda_low);
  std::vector<int> hi(static_cast<std::size_t>(n), box.lambda_high);
  if (s >= 1) lo[static_cast<std::size_t>(s - 1)] = std::max(lo[static_cast<std::size_t>(s - 1)], s - n);
  if (s + 1 <= n) hi[static_cast<std::size_t>(s)] = std::min(hi[static_cast<std::size_t>(s)], s - dims.m);
  enumerate_dominant(std::move(lo), std::move(hi), box.z_window,
                     [&](const std::vector<int>& lam) { fn(DominantWeight(lam)); });
}

}  // namespace

EquivariantCharacter h_s_character(int s, const Dimensions& dims, const TruncationBox& box, int wdeg) {
  EquivariantCharacter out(dims, box);
  for_each_h_s(s, dims, box, [&](const DominantWeight& lambda) {
    out.add(embed_lambda_s(lambda, s, dims), lambda, wdeg);
  });
  return out;
}

EquivariantCharacter local_cohomology_character(int p, const Dimensions& dims, const TruncationBox& box) {
  const int m = dims.m;
  const int n = dims.n;
  if (p < 1 || p > n) throw std::invalid_argument("local cohomology: p out of range [1,n]");
  EquivariantCharacter out(dims, box);
  for (int s = 0; s <= p - 1; ++s) {
    const WPolynomial spread = gauss_polynomial(p - s - 1, n - p)
                                   .substitute_power(2)
                                   .shifted((n - p + 1) * (n - p + 1) + (n - s) * (m - n));
    for_each_h_s(s, dims, box, [&](const DominantWeight& lambda) {
      const DominantWeight alpha = embed_lambda_s(lambda, s, dims);
      for (const auto& [w, coeff] : spread.coefficients()) out.add(alpha, lambda, w, coeff);
    });
  }
  return out;
}

std::pair<int, int> cohomological_range(int p, const Dimensions& dims) {
  if (p < 1 || p > dims.n) throw std::invalid_argument("cohomological_range: p out of range [1,n]");
  return {(dims.m - p + 1) * (dims.n - p + 1), dims.m * dims.n - p * p + 1};
}

RegularityResult regularity(const Partition& x, const Dimensions& dims) {
  if (x.is_zero()) throw std::invalid_argument("regularity: I_0 = S has no regularity in this sense");
  if (x.length() != dims.n) throw std::invalid_argument("partition length must equal n");
  const int n = dims.n;
  auto row = [&](int i) { return i == n + 1 ? -1 : x.row(i); };
  RegularityResult best{std::numeric_limits<int>::min(), 0};
  for (int p = 1; p <= n; ++p) {
    if (row(p) <= row(p + 1)) continue;
    const int value = n * row(p) + (p - 2) * (n - p);
    if (value > best.regularity) best = {value, p};
  }
  return best;
}

bool quotient_cell_nonempty(const Partition& x, int p, int s, const std::vector<int>& t, const Dimensions& dims) {
  const int n = dims.n;
  for (int j = 1; j <= n - p; ++j)
    if (x.row(p) - x.row(n + 1 - j) < p - t[static_cast<std::size_t>(j - 1)]) return false;
  return s >= p - x.row(p);
}

int regularity_oracle(const Partition& x, const Dimensions& dims) {
  if (x.is_zero()) throw std::invalid_argument("regularity: I_0 = S has no regularity in this sense");
  const int m = dims.m;
  const int n = dims.n;
  std::optional<int> best;
  for (int p = 1; p <= n; ++p) {
    for (const auto& chain : enumerate_chains(p, ChainFlavor::Quotient, dims)) {
      if (!quotient_cell_nonempty(x, p, chain.s, chain.t, dims)) continue;
      const int s = chain.s;
      // Minimal-size weight: (s-n)^s followed by (p - x_p - m)^(n-s).
      const int size = s * (s - n) + (n - s) * (p - x.row(p) - m);
      const int value = -size - m * n + p * p + s * (m - n) + 2 * chain.t_sum();
      best = best ? std::max(*best, value) : value;
    }
  }
  if (!best) throw std::logic_error("regularity_oracle: no nonempty cell for " + x.to_string());
  return *best;
}

TruncationBox regularity_box(const Partition& x, const Dimensions& dims) {
  int low = -dims.n;
  for (int p = 1; p <= dims.n; ++p) low = std::min(low, p - x.row(p) - dims.m);
  return TruncationBox(low, 0);
}

int regularity_from_character(const EquivariantCharacter& ext_quotient) {
  if (ext_quotient.empty()) throw std::invalid_argument("regularity_from_character: empty character");
  long long best = std::numeric_limits<long long>::min();
  for (const auto& [key, mult] : ext_quotient.terms()) best = std::max(best, -key.zdeg - key.wdeg);
  return static_cast<int>(best + 1);
}

bool has_linear_resolution(const Partition& x, const Dimensions& dims) {
  return regularity(x, dims).regularity == x.size();
}

}  // namespace detcoh
