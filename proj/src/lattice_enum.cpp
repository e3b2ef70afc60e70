#include "detcoh/lattice_enum.hpp"

#include <algorithm>
#include <stdexcept>

namespace detcoh {

void enumerate_dominant(std::vector<int> lo, std::vector<int> hi, const std::optional<ZWindow>& window,
                        const std::function<void(const std::vector<int>&)>& fn) {
  const std::size_t n = lo.size();
  if (hi.size() != n) throw std::invalid_argument("enumerate_dominant: bound vectors differ in length");
  for (std::size_t i = 1; i < n; ++i) hi[i] = std::min(hi[i], hi[i - 1]);
  for (std::size_t i = n; i-- > 1;) lo[i - 1] = std::max(lo[i - 1], lo[i]);
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;

  std::vector<long long> suffix_lo(n + 1, 0);
  std::vector<long long> suffix_hi(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    suffix_lo[i] = suffix_lo[i + 1] + lo[i];
    suffix_hi[i] = suffix_hi[i + 1] + hi[i];
  }
  std::vector<int> v(n);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long used) {
    if (i == n) {
      if (!window || window->contains(used)) fn(v);
      return;
    }
    const int top = i == 0 ? hi[0] : std::min(hi[i], v[i - 1]);
    const auto rest = static_cast<long long>(n - i - 1);
    for (int x = top; x >= lo[i]; --x) {
      if (window) {
        // The remaining entries lie in [their lower bounds, min(x, their upper bounds)].
        const long long rest_max = std::min(suffix_hi[i + 1], static_cast<long long>(x) * rest);
        if (used + x + rest_max < window->lo) break;
        if (used + x + suffix_lo[i + 1] > window->hi) continue;
      }
      v[i] = x;
      rec(i + 1, used + x);
    }
  };
  rec(0, 0);
}

}  // namespace detcoh
