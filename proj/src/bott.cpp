#include "detcoh/bott.hpp"

#include <algorithm>
#include <stdexcept>

namespace detcoh {

std::string BottStepResult::to_string() const {
  if (vanishes()) return "vanishes";
  return "H^" + std::to_string(shift()) + " " + weight().to_string();
}

BottStepResult pushforward_step(const DominantWeight& mu) {
  const int q = mu.length();
  for (int t = 0; t <= q - 1; ++t)
    if (mu.at(q - t) + t == -1) return BottStepResult::vanishing();

  // Sentinels mu_0 = +inf and mu_{q+1} = -inf make the boundary inequalities true.
  auto left_ok = [&](int t) { return q - t + 1 > q || mu.at(q - t + 1) + t + 1 <= 0; };
  auto right_ok = [&](int t) { return q - t < 1 || 0 <= mu.at(q - t) + t; };
  for (int t = 0; t <= q; ++t) {
    if (!left_ok(t) || !right_ok(t)) continue;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(q + 1));
    for (int i = 1; i <= q - t; ++i) out.push_back(mu.at(i));
    out.push_back(-t);
    for (int i = q - t + 1; i <= q; ++i) out.push_back(mu.at(i) + 1);
    return BottStepResult::nonzero(t, DominantWeight(std::move(out)));
  }
  throw std::logic_error("pushforward_step: no admissible t for " + mu.to_string());
}

std::optional<int> grassmannian_index(const DominantWeight& mu, int d) {
  const int n = mu.length();
  if (d < n) throw std::invalid_argument("pushforward_final: d must be at least n");
  for (int s = 0; s <= n - 1; ++s) {
    const int v = mu.at(n - s) + s;
    if (n - d <= v && v <= -1) return std::nullopt;
  }
  auto upper_ok = [&](int s) { return n - s < 1 || mu.at(n - s) >= -s; };
  auto lower_ok = [&](int s) { return n - s + 1 > n || mu.at(n - s + 1) <= -s - d + n; };
  for (int s = 0; s <= n; ++s)
    if (upper_ok(s) && lower_ok(s)) return s;
  throw std::logic_error("pushforward_final: no admissible s for " + mu.to_string());
}

BottStepResult pushforward_final(const DominantWeight& mu, int d) {
  const auto index = grassmannian_index(mu, d);
  if (!index) return BottStepResult::vanishing();
  const int n = mu.length();
  const int s = *index;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int i = 1; i <= n - s; ++i) out.push_back(mu.at(i));
  for (int i = 0; i < d - n; ++i) out.push_back(-s);
  for (int i = n - s + 1; i <= n; ++i) out.push_back(mu.at(i) + (d - n));
  return BottStepResult::nonzero(s * (d - n), DominantWeight(std::move(out)));
}

BottStepResult rho_sort_oracle(const std::vector<int>& weight) {
  const int N = static_cast<int>(weight.size());
  std::vector<int> shifted(weight);
  for (int i = 0; i < N; ++i) shifted[static_cast<std::size_t>(i)] += N - 1 - i;

  // Insertion sort into decreasing order; each swap is one inversion.
  int inversions = 0;
  for (int i = 1; i < N; ++i) {
    for (int j = i; j > 0; --j) {
      auto& a = shifted[static_cast<std::size_t>(j - 1)];
      auto& b = shifted[static_cast<std::size_t>(j)];
      if (a == b) return BottStepResult::vanishing();
      if (a > b) break;
      std::swap(a, b);
      ++inversions;
    }
  }
  for (int i = 1; i < N; ++i)
    if (shifted[static_cast<std::size_t>(i)] == shifted[static_cast<std::size_t>(i - 1)])
      return BottStepResult::vanishing();
  for (int i = 0; i < N; ++i) shifted[static_cast<std::size_t>(i)] -= N - 1 - i;
  return BottStepResult::nonzero(inversions, DominantWeight(std::move(shifted)));
}

}  // namespace detcoh
