#pragma once

// Backtracking over dominant integer vectors with per-coordinate bounds.

#include <functional>
#include <optional>
#include <vector>

#include "detcoh/weights.hpp"

namespace detcoh {

/// Calls `fn` for every weakly decreasing v with lo[i] <= v[i] <= hi[i] and
/// sum(v) in the window, in lexicographically decreasing order. The bounds are
/// tightened by dominance first (hi by prefix minima, lo by suffix maxima), so
/// the cost is proportional to the output plus the number of coordinates.
void enumerate_dominant(std::vector<int> lo, std::vector<int> hi, const std::optional<ZWindow>& window,
                        const std::function<void(const std::vector<int>&)>& fn);

}  // namespace detcoh
