#include "detcoh/character.hpp"

#include <algorithm>
#include <stdexcept>

namespace detcoh {

namespace {

std::optional<ZWindow> intersect_windows(const std::optional<ZWindow>& a, const std::optional<ZWindow>& b) {
  if (!a) return b;
  if (!b) return a;
  return ZWindow{std::max(a->lo, b->lo), std::min(a->hi, b->hi)};
}

// Partitions of r with at most `rows` parts, each padded to `rows`.
void partitions_of(int r, int rows, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (r == 0) {
    std::vector<int> p(cur);
    p.resize(static_cast<std::size_t>(rows), 0);
    out.push_back(std::move(p));
    return;
  }
  if (static_cast<int>(cur.size()) == rows) return;
  for (int v = std::min(r, max_part); v >= 1; --v) {
    cur.push_back(v);
    partitions_of(r - v, rows, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TruncationBox::TruncationBox(int low, int high, std::optional<ZWindow> window)
    : lambda_low(low), lambda_high(high), z_window(window) {
  if (low > high) throw std::invalid_argument("truncation box needs lambda_low <= lambda_high");
}

bool TruncationBox::contains(const DominantWeight& beta) const {
  for (int v : beta.entries())
    if (v < lambda_low || v > lambda_high) return false;
  if (z_window && !z_window->contains(weight_size(beta))) return false;
  return true;
}

TruncationBox TruncationBox::intersect(const TruncationBox& other) const {
  return TruncationBox(std::max(lambda_low, other.lambda_low), std::min(lambda_high, other.lambda_high),
                       intersect_windows(z_window, other.z_window));
}

bool TruncationBox::inside(const TruncationBox& outer) const {
  if (lambda_low < outer.lambda_low || lambda_high > outer.lambda_high) return false;
  if (!outer.z_window) return true;
  return z_window && z_window->lo >= outer.z_window->lo && z_window->hi <= outer.z_window->hi;
}

void EquivariantCharacter::add(const DominantWeight& alpha, const DominantWeight& beta, int wdeg,
                               const BigInt& mult) {
  if (alpha.length() != dims_.m || beta.length() != dims_.n)
    throw std::invalid_argument("irrep pair has the wrong shape for these dimensions");
  const long long z = weight_size(beta);
  if (weight_size(alpha) != z)
    throw std::invalid_argument("|alpha| != |beta| for " + alpha.to_string() + " " + beta.to_string());
  if (!box_.contains(beta)) throw std::invalid_argument("term " + beta.to_string() + " lies outside the box");
  if (mult == 0) return;
  TermKey key{wdeg, z, alpha, beta};
  auto it = terms_.find(key);
  BigInt total = (it == terms_.end() ? BigInt(0) : it->second) + mult;
  if (total < 0) throw std::domain_error("negative multiplicity at " + alpha.to_string() + " " + beta.to_string());
  if (total == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(total));
  } else {
    it->second = std::move(total);
  }
}

bool EquivariantCharacter::add_if_in_box(const DominantWeight& alpha, const DominantWeight& beta, int wdeg,
                                         const BigInt& mult) {
  if (!box_.contains(beta)) return false;
  add(alpha, beta, wdeg, mult);
  return true;
}

BigInt EquivariantCharacter::multiplicity(const DominantWeight& alpha, const DominantWeight& beta, int wdeg) const {
  auto it = terms_.find(TermKey{wdeg, weight_size(beta), alpha, beta});
  return it == terms_.end() ? BigInt(0) : it->second;
}

EquivariantCharacter EquivariantCharacter::restricted(const TruncationBox& box) const {
  EquivariantCharacter out(dims_, box_.intersect(box));
  for (const auto& [key, mult] : terms_)
    if (out.box_.contains(key.beta)) out.terms_.emplace(key, mult);
  if (complete_z_ && out.box_.lambda_low == box_.lambda_low && out.box_.lambda_high == box_.lambda_high)
    out.complete_z_ = intersect_windows(complete_z_, out.box_.z_window);
  return out;
}

EquivariantCharacter combine(const EquivariantCharacter& a, const EquivariantCharacter& b, long long coeff_a,
                             long long coeff_b) {
  if (!(a.dims() == b.dims())) throw std::invalid_argument("combine: characters over different dimensions");
  const TruncationBox box = a.box().intersect(b.box());
  EquivariantCharacter::TermMap sums;
  auto accumulate = [&](const EquivariantCharacter& c, long long coeff) {
    if (coeff == 0) return;
    for (const auto& [key, mult] : c.terms())
      if (box.contains(key.beta)) sums[key] += mult * coeff;
  };
  accumulate(a, coeff_a);
  accumulate(b, coeff_b);
  EquivariantCharacter out(a.dims(), box);
  for (const auto& [key, mult] : sums) {
    if (mult < 0)
      throw std::domain_error("combine: negative multiplicity " + mult.str() + " at alpha=" + key.alpha.to_string() +
                              " beta=" + key.beta.to_string() + " w=" + std::to_string(key.wdeg));
    if (mult > 0) out.add(key.alpha, key.beta, key.wdeg, mult);
  }
  return out;
}

bool equal_on_box(const EquivariantCharacter& a, const EquivariantCharacter& b) {
  return !first_difference(a, b).has_value();
}

std::optional<std::string> first_difference(const EquivariantCharacter& a, const EquivariantCharacter& b) {
  const TruncationBox box = a.box().intersect(b.box());
  const auto ra = a.restricted(box);
  const auto rb = b.restricted(box);
  auto ia = ra.terms().begin();
  auto ib = rb.terms().begin();
  auto describe = [](const TermKey& k, const BigInt& ma, const BigInt& mb) {
    return "w=" + std::to_string(k.wdeg) + " z=" + std::to_string(k.zdeg) + " alpha=" + k.alpha.to_string() +
           " beta=" + k.beta.to_string() + " mult " + ma.str() + " vs " + mb.str();
  };
  while (ia != ra.terms().end() || ib != rb.terms().end()) {
    if (ib == rb.terms().end() || (ia != ra.terms().end() && ia->first < ib->first))
      return describe(ia->first, ia->second, 0);
    if (ia == ra.terms().end() || ib->first < ia->first) return describe(ib->first, 0, ib->second);
    if (ia->second != ib->second) return describe(ia->first, ia->second, ib->second);
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

bool dominated_on_box(const EquivariantCharacter& a, const EquivariantCharacter& b) {
  const TruncationBox box = a.box().intersect(b.box());
  for (const auto& [key, mult] : a.terms()) {
    if (!box.contains(key.beta)) continue;
    auto it = b.terms().find(key);
    if (it == b.terms().end() || it->second < mult) return false;
  }
  return true;
}

std::map<long long, SliceValue> dimension_slice(const EquivariantCharacter& c, int wdeg) {
  std::map<long long, SliceValue> out;
  for (const auto& [key, mult] : c.terms()) {
    if (key.wdeg != wdeg) continue;
    auto& slot = out[key.zdeg];
    slot.dimension += mult * weyl_dimension(key.alpha) * weyl_dimension(key.beta);
  }
  for (auto& [z, slot] : out) slot.lower_bound_only = !(c.complete_z() && c.complete_z()->contains(z));
  return out;
}

EquivariantCharacter cauchy_character(const Dimensions& dims, ZWindow window) {
  if (window.lo < 0) throw std::invalid_argument("cauchy_character: window must be nonnegative");
  const int hi = std::max(window.hi, 0);
  EquivariantCharacter out(dims, TruncationBox(0, hi, window));
  for (int r = window.lo; r <= window.hi; ++r) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_of(r, dims.n, r, cur, parts);
    for (const auto& x : parts) {
      std::vector<int> alpha(x);
      alpha.resize(static_cast<std::size_t>(dims.m), 0);
      out.add(DominantWeight(std::move(alpha)), DominantWeight(x), 0);
    }
  }
  // Every partition of r has parts <= r <= hi, so the window is complete.
  out.set_complete_z(window);
  return out;
}

}  // namespace detcoh
