#include "detcoh/ideal_lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace detcoh {

namespace {

// Partitions y with lo[i] <= y_{i+1} <= hi[i] and |y| in the window. lo must be
// weakly decreasing so every prefix stays extendable.
void enumerate_rows(const std::vector<int>& lo, const std::vector<int>& hi, ZWindow window, int length,
                    std::vector<Partition>& out) {
  const std::size_t rows = lo.size();
  std::vector<int> suffix_lo(rows + 1, 0);
  for (std::size_t i = rows; i-- > 0;) suffix_lo[i] = suffix_lo[i + 1] + lo[i];
  std::vector<int> y(rows);

  std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int prev, int used) {
    if (i == rows) {
      if (used >= window.lo) out.push_back(normalize(y, length));
      return;
    }
    int top = std::min({prev, hi[i], window.hi - used - suffix_lo[i + 1]});
    for (int v = lo[i]; v <= top; ++v) {
      y[i] = v;
      rec(i + 1, v, used + v);
    }
  };
  if (suffix_lo[0] <= window.hi) rec(0, std::numeric_limits<int>::max(), 0);
}

void sort_graded(std::vector<Partition>& ys) {
  std::sort(ys.begin(), ys.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

}  // namespace

void SubquotientSpec::validate() const {
  if (p < 0 || p > x.length()) throw std::invalid_argument("subquotient index p out of range [0,n]");
  for (int i = 2; i <= p; ++i)
    if (x.row(i) != x.row(1))
      throw std::invalid_argument("J_{x,p} needs x_1 = .. = x_p, got x=" + x.to_string() +
                                  " p=" + std::to_string(p));
}

PartitionIdeal ideal_from_generators(const std::vector<Partition>& gens, const Dimensions& dims) {
  PartitionIdeal ideal(dims);
  std::vector<Partition> sorted(gens);
  for (const auto& g : sorted)
    if (g.length() != dims.n) throw std::invalid_argument("generator " + g.to_string() + " has the wrong ambient length");
  // Smaller partitions first, so a generator only needs checking against kept ones.
  sort_graded(sorted);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& g : sorted) {
    bool absorbed = std::any_of(ideal.generators_.begin(), ideal.generators_.end(),
                                [&](const Partition& h) { return contains(h, g); });
    if (!absorbed) ideal.generators_.push_back(g);
  }
  std::sort(ideal.generators_.begin(), ideal.generators_.end());
  return ideal;
}

PartitionIdeal principal_ideal(const Partition& x, const Dimensions& dims) {
  return ideal_from_generators({x}, dims);
}

bool member(const PartitionIdeal& ideal, const Partition& y) {
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Partition& g) { return contains(g, y); });
}

PartitionIdeal intersect(const PartitionIdeal& a, const PartitionIdeal& b) {
  std::vector<Partition> joins;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) joins.push_back(join(x, y));
  return ideal_from_generators(joins, a.dims());
}

PartitionIdeal sum(const PartitionIdeal& a, const PartitionIdeal& b) {
  std::vector<Partition> all(a.generators());
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return ideal_from_generators(all, a.dims());
}

PartitionIdeal succ_ideal(const Partition& x, int p, const Dimensions& dims) {
  const int n = dims.n;
  if (p < 0 || p > n) throw std::invalid_argument("succ_ideal: p out of range [0,n]");
  std::vector<Partition> gens;
  for (int i = p + 1; i <= n; ++i) {
    std::vector<int> bump(static_cast<std::size_t>(i), x.row(i) + 1);
    gens.push_back(join(x, normalize(bump, n)));
  }
  return ideal_from_generators(gens, dims);
}

std::vector<Partition> graded_support(const PartitionIdeal& ideal, ZWindow window) {
  std::vector<Partition> out;
  if (ideal.is_zero() || window.hi < window.lo) return out;
  const int n = ideal.dims().n;
  // Enumerate above each generator, then merge.
  for (const auto& g : ideal.generators()) {
    std::vector<Partition> above;
    enumerate_rows(g.padded(), std::vector<int>(static_cast<std::size_t>(n), std::numeric_limits<int>::max()),
                   window, n, above);
    out.insert(out.end(), above.begin(), above.end());
  }
  sort_graded(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> graded_support(const SubquotientSpec& spec, const Dimensions& dims, ZWindow window) {
  spec.validate();
  std::vector<Partition> out;
  if (window.hi < window.lo) return out;
  const int n = dims.n;
  std::vector<int> lo = spec.x.padded(n);
  std::vector<int> hi(static_cast<std::size_t>(n), std::numeric_limits<int>::max());
  for (int i = spec.p + 1; i <= n; ++i) hi[static_cast<std::size_t>(i - 1)] = lo[static_cast<std::size_t>(i - 1)];
  enumerate_rows(lo, hi, window, n, out);
  sort_graded(out);
  return out;
}

std::vector<SubquotientSpec> filtration_quotients(const Partition& x, int p, int d, const Dimensions& dims,
                                                  std::optional<int> max_part) {
  const int n = dims.n;
  if (p < 0 || p > n - 1) throw std::invalid_argument("filtration_quotients: p out of range [0,n-1]");
  if (d < 0) throw std::invalid_argument("filtration_quotients: d must be nonnegative");
  for (int i = 2; i <= p + 1; ++i)
    if (x.row(i) != x.row(1))
      throw std::invalid_argument("filtration_quotients needs x_1 = .. = x_{p+1}");

  std::vector<SubquotientSpec> out;
  int top = x.row(1) + d;
  if (max_part) top = std::min(top, *max_part);
  const std::vector<int> base = x.padded(n);
  for (int c = x.row(1); c <= top; ++c) {
    std::vector<int> lo(base);
    std::vector<int> hi(static_cast<std::size_t>(n), c);
    for (int i = 0; i <= p; ++i) lo[static_cast<std::size_t>(i)] = c;
    std::vector<Partition> zs;
    enumerate_rows(lo, hi, ZWindow{0, std::numeric_limits<int>::max() / 2}, n, zs);
    for (auto& z : zs) out.push_back(SubquotientSpec{std::move(z), p});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detcoh
