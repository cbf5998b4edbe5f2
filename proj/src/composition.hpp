#pragma once

#include <algorithm>
#include <span>

namespace lauricella::detail {

/// Advances a composition to its lexicographic successor. Returns false after the last one.
inline bool next_composition(std::span<int> e) {
  const std::size_t last = e.size() - 1;
  std::size_t j = last;
  while (j > 0 && e[j] == 0) --j;
  if (j == 0) return false;
  const int moved = e[j];
  e[j] = 0;
  e[j - 1] += 1;
  e[last] = moved - 1;
  return true;
}

/// Calls visit() once per composition of `total` into e.size() parts, with e
/// holding the current composition, in ascending lexicographic order.
template <class Visit>
void walk_compositions(std::span<int> e, int total, Visit&& visit) {
  if (e.empty()) {
    if (total == 0) visit();
    return;
  }
  std::fill(e.begin(), e.end(), 0);
  e.back() = total;
  do {
    visit();
  } while (next_composition(e));
}

}  // namespace lauricella::detail
