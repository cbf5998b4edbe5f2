#include "lauricella/multi_index.hpp"

#include <numeric>
#include <string>

#include "composition.hpp"
#include "lauricella/error.hpp"

namespace lauricella {

using detail::walk_compositions;

TriangularMultiIndex::TriangularMultiIndex(int n) : n_(n) {
  if (n < 2) throw index_range_error("triangular multi-index needs n >= 2, got " + std::to_string(n));
  entries_.assign(static_cast<std::size_t>(slot_count(n)), 0);
}

TriangularMultiIndex::TriangularMultiIndex(int n, std::vector<int> entries) : TriangularMultiIndex(n) {
  if (entries.size() != entries_.size()) {
    throw index_range_error("triangular multi-index of size " + std::to_string(n) + " needs " +
                            std::to_string(entries_.size()) + " entries");
  }
  for (int v : entries) {
    if (v < 0) throw index_range_error("multi-index entries must be nonnegative");
  }
  entries_ = std::move(entries);
}

int TriangularMultiIndex::slot(int n, int i, int j) {
  if (i < 2 || i > j || j > n) {
    throw index_range_error("m_{" + std::to_string(i) + "," + std::to_string(j) + "} is not a slot for n = " +
                            std::to_string(n));
  }
  // Rows 2..i-1 hold n-1, n-2, ... entries.
  const int before = (i - 2) * (2 * n - i + 1) / 2;
  return before + (j - i);
}

int TriangularMultiIndex::at(int i, int j) const { return entries_[static_cast<std::size_t>(slot(n_, i, j))]; }

void TriangularMultiIndex::set(int i, int j, int value) {
  if (value < 0) throw index_range_error("multi-index entries must be nonnegative");
  entries_[static_cast<std::size_t>(slot(n_, i, j))] = value;
}

int TriangularMultiIndex::total_weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int a_weight(const TriangularMultiIndex& idx, int k) {
  const int n = idx.n();
  if (k < 0 || k > n) throw index_range_error("A(k,n) needs 0 <= k <= n, got k = " + std::to_string(k));
  int sum = 0;
  for (int i = 2; i <= std::min(k + 1, n); ++i) {
    for (int j = i; j <= n; ++j) sum += idx.at(i, j);
  }
  return sum;
}

int b_weight(const TriangularMultiIndex& idx, int k) {
  const int n = idx.n();
  if (k < 1 || k > n) throw index_range_error("B(k,n) needs 1 <= k <= n, got k = " + std::to_string(k));
  int sum = 0;
  for (int i = 2; i <= k; ++i) sum += idx.at(i, k);
  if (k + 1 <= n) {
    for (int i = k + 1; i <= n; ++i) sum += idx.at(k + 1, i);
  }
  return sum;
}

void fill_weight_vectors(const TriangularMultiIndex& idx, std::span<int> a, std::span<int> b) {
  fill_weight_vectors(idx.n(), idx.entries(), a, b);
}

void fill_weight_vectors(int n, std::span<const int> e, std::span<int> a, std::span<int> b) {
  // Row sums give A by prefix; B(k) is column k plus row k+1.
  int pos = 0;
  a[0] = 0;
  for (int k = 1; k <= n; ++k) b[static_cast<std::size_t>(k)] = 0;
  b[0] = 0;
  for (int i = 2; i <= n; ++i) {
    int row = 0;
    for (int j = i; j <= n; ++j, ++pos) {
      const int m = e[static_cast<std::size_t>(pos)];
      row += m;
      b[static_cast<std::size_t>(j)] += m;
    }
    b[static_cast<std::size_t>(i - 1)] += row;
    a[static_cast<std::size_t>(i - 1)] = a[static_cast<std::size_t>(i - 2)] + row;
  }
  a[static_cast<std::size_t>(n)] = a[static_cast<std::size_t>(n - 1)];
}

WeightVectors weight_vectors(const TriangularMultiIndex& idx) {
  WeightVectors w;
  w.a.assign(static_cast<std::size_t>(idx.n()) + 1, 0);
  w.b.assign(static_cast<std::size_t>(idx.n()) + 1, 0);
  fill_weight_vectors(idx, w.a, w.b);
  return w;
}

void for_each_composition(int parts, int total, const std::function<void(std::span<const int>)>& visit) {
  if (parts < 0 || total < 0) throw index_range_error("compositions need nonnegative parts and total");
  std::vector<int> e(static_cast<std::size_t>(parts), 0);
  walk_compositions(std::span<int>(e), total, [&] { visit(std::span<const int>(e)); });
}

void for_each_of_weight(int n, int w, const std::function<void(const TriangularMultiIndex&)>& visit) {
  if (w < 0) throw index_range_error("weight must be nonnegative");
  TriangularMultiIndex idx(n);
  walk_compositions(idx.mutable_entries(), w, [&] { visit(idx); });
}

std::vector<TriangularMultiIndex> enumerate_by_weight(int n, int w) {
  std::vector<TriangularMultiIndex> out;
  for_each_of_weight(n, w, [&](const TriangularMultiIndex& idx) { out.push_back(idx); });
  return out;
}

}  // namespace lauricella
