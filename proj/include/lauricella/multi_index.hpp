#pragma once

#include <functional>
#include <span>
#include <vector>

namespace lauricella {

/// The family m_{i,j}, 2 <= i <= j <= n, stored densely in row-major (i, then j) order.
class TriangularMultiIndex {
 public:
  /// All-zero index with n(n-1)/2 entries. Throws index_range_error for n < 2.
  explicit TriangularMultiIndex(int n);
  /// Throws unless entries has exactly n(n-1)/2 nonnegative values.
  TriangularMultiIndex(int n, std::vector<int> entries);

  static int slot_count(int n) { return n * (n - 1) / 2; }
  /// Position of m_{i,j} in the dense entry vector.
  static int slot(int n, int i, int j);

  int n() const { return n_; }
  int at(int i, int j) const;
  void set(int i, int j, int value);
  std::span<const int> entries() const { return entries_; }
  std::span<int> mutable_entries() { return entries_; }
  int total_weight() const;

  friend bool operator==(const TriangularMultiIndex&, const TriangularMultiIndex&) = default;

 private:
  int n_;
  std::vector<int> entries_;
};

/// A(k, n): sum of m_{i,j} over 2 <= i <= k+1, i <= j <= n. Defined for 0 <= k <= n.
int a_weight(const TriangularMultiIndex& idx, int k);
/// B(k, n): sum of m_{i,k} over 2 <= i <= k plus m_{k+1,i} over k+1 <= i <= n. Defined for 1 <= k <= n.
int b_weight(const TriangularMultiIndex& idx, int k);

/// A(0..n, n) and B(1..n, n) for one index; slot 0 of `b` is unused and zero.
struct WeightVectors {
  std::vector<int> a;
  std::vector<int> b;
};
WeightVectors weight_vectors(const TriangularMultiIndex& idx);
/// Same as weight_vectors, writing into preallocated storage (sizes n+1).
void fill_weight_vectors(const TriangularMultiIndex& idx, std::span<int> a, std::span<int> b);
/// Same, reading a raw dense entry vector of an index of size n.
void fill_weight_vectors(int n, std::span<const int> entries, std::span<int> a, std::span<int> b);

/// Visits every composition of `total` into `parts` nonnegative integers in
/// ascending lexicographic order. `parts == 0` yields one empty composition
/// when total is 0 and nothing otherwise.
void for_each_composition(int parts, int total, const std::function<void(std::span<const int>)>& visit);

/// Visits every index of size n with total weight w, in ascending lexicographic
/// order of the entry vector. The visited object is reused between calls.
void for_each_of_weight(int n, int w, const std::function<void(const TriangularMultiIndex&)>& visit);

std::vector<TriangularMultiIndex> enumerate_by_weight(int n, int w);

}  // namespace lauricella
