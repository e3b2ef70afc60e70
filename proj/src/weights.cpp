#include "detcoh/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace detcoh {

namespace {

std::string join_ints(std::span<const int> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

Dimensions Dimensions::make(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("matrix dimensions must be positive");
  if (m < n) return Dimensions{n, m, true};
  return Dimensions{m, n, false};
}

Partition::Partition(int length) : length_(length) {
  if (length < 0) throw std::invalid_argument("negative partition length");
}

Partition::Partition(std::initializer_list<int> parts, int length)
    : Partition(normalize(std::vector<int>(parts), length)) {}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int i) const {
  if (i < 1) throw std::out_of_range("partition rows are 1-based");
  return i <= num_rows() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

std::vector<int> Partition::padded() const { return padded(length_); }

std::vector<int> Partition::padded(int to_length) const {
  if (to_length < num_rows()) throw std::invalid_argument("cannot pad below the number of rows");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(to_length), 0);
  return out;
}

std::string Partition::to_string() const { return join_ints(parts_); }

Partition normalize(std::span<const int> seq, int logical_length) {
  if (logical_length < 0) throw std::invalid_argument("negative partition length");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0)
      throw std::invalid_argument("negative part at position " + std::to_string(i + 1));
    if (i > 0 && seq[i] > seq[i - 1])
      throw std::invalid_argument("increasing parts at position " + std::to_string(i + 1));
  }
  Partition p(logical_length);
  std::size_t nonzero = 0;
  while (nonzero < seq.size() && seq[nonzero] > 0) ++nonzero;
  if (static_cast<int>(nonzero) > logical_length)
    throw std::invalid_argument("partition " + join_ints(seq) + " has more than " +
                                std::to_string(logical_length) + " nonzero parts");
  p.parts_.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(nonzero));
  return p;
}

bool contains(const Partition& x, const Partition& y) {
  if (x.length() != y.length()) throw std::invalid_argument("partitions with different ambient lengths");
  if (x.num_rows() > y.num_rows()) return false;
  for (int i = 1; i <= x.num_rows(); ++i)
    if (x.row(i) > y.row(i)) return false;
  return true;
}

Partition join(const Partition& x, const Partition& y) {
  if (x.length() != y.length()) throw std::invalid_argument("partitions with different ambient lengths");
  std::vector<int> z(static_cast<std::size_t>(std::max(x.num_rows(), y.num_rows())));
  for (std::size_t i = 0; i < z.size(); ++i) {
    const int r = static_cast<int>(i) + 1;
    z[i] = std::max(x.row(r), y.row(r));
  }
  return normalize(z, x.length());
}

DominantWeight::DominantWeight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!is_dominant(entries_)) throw std::invalid_argument("weight " + to_string() + " is not dominant");
}

bool DominantWeight::is_dominant(std::span<const int> entries) {
  return std::is_sorted(entries.begin(), entries.end(), std::greater<>());
}

DominantWeight DominantWeight::from_partition(const Partition& x, int length) {
  return DominantWeight(x.padded(length));
}

std::string DominantWeight::to_string() const { return join_ints(entries_); }

long long weight_size(std::span<const int> entries) {
  return std::accumulate(entries.begin(), entries.end(), 0LL);
}

long long weight_size(const DominantWeight& lambda) { return weight_size(lambda.entries()); }

BigInt weyl_dimension(const DominantWeight& lambda) {
  // Exact: the numerator product is divided by the superfactorial once.
  const int N = lambda.length();
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 1; i <= N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      num *= BigInt(lambda.at(i) - lambda.at(j) + j - i);
      den *= BigInt(j - i);
    }
  }
  return num / den;
}

bool lambda_s_admissible(std::span<const int> lambda, int s, const Dimensions& dims) {
  const int n = dims.n;
  if (static_cast<int>(lambda.size()) != n || s < 0 || s > n) return false;
  if (s >= 1 && lambda[static_cast<std::size_t>(s - 1)] < s - n) return false;
  if (s + 1 <= n && lambda[static_cast<std::size_t>(s)] > s - dims.m) return false;
  return true;
}

DominantWeight embed_lambda_s(const DominantWeight& lambda, int s, const Dimensions& dims) {
  const int m = dims.m;
  const int n = dims.n;
  if (lambda.length() != n) throw std::invalid_argument("lambda(s) needs a weight of length n");
  if (s < 0 || s > n) throw std::invalid_argument("lambda(s): s out of range [0,n]");
  if (!lambda_s_admissible(lambda.entries(), s, dims))
    throw std::invalid_argument("lambda(s): " + lambda.to_string() + " violates the dominance bounds for s=" +
                                std::to_string(s));
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= s; ++i) out.push_back(lambda.at(i));
  for (int i = 0; i < m - n; ++i) out.push_back(s - n);
  for (int i = s + 1; i <= n; ++i) out.push_back(lambda.at(i) + (m - n));
  return DominantWeight(std::move(out));
}

}  // namespace detcoh
