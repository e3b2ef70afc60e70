#pragma once

// Partitions, dominant weights of GL_N and the lambda(s) embedding Z^n -> Z^m.
//
// Indexing follows the usual 1-based convention of the formulas: row(1) is
// the largest part. Storage is 0-based.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace detcoh {

using BigInt = boost::multiprecision::cpp_int;

/// Sizes of the two factors F and G of the matrix space, m = dim F >= n = dim G.
struct Dimensions {
  int m = 1;
  int n = 1;
  /// Set when the caller asked for m < n and the factors were swapped.
  bool transposed = false;

  /// Validates m, n >= 1 and swaps them if m < n.
  static Dimensions make(int m, int n);

  bool operator==(const Dimensions& o) const { return m == o.m && n == o.n; }
};

/// Inclusive window of z-degrees (total sizes).
struct ZWindow {
  int lo = 0;
  int hi = 0;
  bool contains(long long z) const { return lo <= z && z <= hi; }
  bool operator==(const ZWindow&) const = default;
};

/// A partition with at most `length()` nonzero rows. Trailing zeros are never
/// stored, so (5,2,1) and (5,2,1,0,0) compare equal for the same ambient length.
class Partition {
 public:
  Partition() = default;
  /// Empty (zero) partition with the given ambient number of rows.
  explicit Partition(int length);
  Partition(std::initializer_list<int> parts, int length);

  int length() const { return length_; }
  std::span<const int> parts() const { return parts_; }
  int num_rows() const { return static_cast<int>(parts_.size()); }
  bool is_zero() const { return parts_.empty(); }
  int size() const;

  /// x_i for i >= 1; zero past the last nonzero row (including i = length+1).
  int row(int i) const;
  /// All `length()` rows, zero padded.
  std::vector<int> padded() const;
  std::vector<int> padded(int to_length) const;

  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  friend Partition normalize(std::span<const int>, int);
  std::vector<int> parts_;
  int length_ = 0;
};

/// Canonical partition from a weakly decreasing nonnegative sequence.
/// Throws std::invalid_argument on increasing or negative input, or on more
/// than `logical_length` nonzero entries.
Partition normalize(std::span<const int> seq, int logical_length);
inline Partition normalize(const std::vector<int>& seq, int logical_length) {
  return normalize(std::span<const int>(seq), logical_length);
}

/// x ⊂ y, i.e. x_i <= y_i for every row.
bool contains(const Partition& x, const Partition& y);

/// Componentwise maximum; the least common upper bound for `contains`.
Partition join(const Partition& x, const Partition& y);

/// Weakly decreasing integer tuple of fixed length (negative entries allowed).
class DominantWeight {
 public:
  DominantWeight() = default;
  /// Throws std::invalid_argument if the entries are not weakly decreasing.
  explicit DominantWeight(std::vector<int> entries);
  DominantWeight(std::initializer_list<int> entries)
      : DominantWeight(std::vector<int>(entries)) {}

  static bool is_dominant(std::span<const int> entries);
  /// The partition padded with zeros to `length` entries.
  static DominantWeight from_partition(const Partition& x, int length);

  int length() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  const std::vector<int>& vec() const { return entries_; }
  /// 1-based access, 1 <= i <= length().
  int at(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
  int operator[](std::size_t i) const { return entries_[i]; }

  std::string to_string() const;

  bool operator==(const DominantWeight&) const = default;
  auto operator<=>(const DominantWeight&) const = default;

 private:
  std::vector<int> entries_;
};

/// |lambda|, the sum of the entries.
long long weight_size(const DominantWeight& lambda);
long long weight_size(std::span<const int> entries);

/// Dimension of the irreducible GL_N representation with highest weight lambda.
BigInt weyl_dimension(const DominantWeight& lambda);

/// True when lambda_s >= s-n and lambda_{s+1} <= s-m, reading lambda_0 = +inf
/// and lambda_{n+1} = -inf, i.e. when the embedding below is dominant.
bool lambda_s_admissible(std::span<const int> lambda, int s, const Dimensions& dims);

/// (lambda_1..lambda_s, (s-n)^(m-n), lambda_{s+1}+(m-n), .., lambda_n+(m-n)).
/// Throws std::invalid_argument when s is outside [0,n], lambda has the wrong
/// length, or the result would not be dominant.
DominantWeight embed_lambda_s(const DominantWeight& lambda, int s, const Dimensions& dims);

}  // namespace detcoh
