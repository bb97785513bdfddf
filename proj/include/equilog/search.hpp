#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace equilog {

/// A function between finite carriers, as the index of each image.
using Map = std::vector<std::size_t>;

/// Depth-first enumeration of maps {0..n-1} → cod where point i may only take values from
/// `candidates[i]`. After fixing point i, `pair_ok(map, i)` must accept the partial map
/// (points 0..i assigned). `visit(map)` is called on every complete map and returns false to
/// stop. Returns false when stopped early.
template <class PairOk, class Visit>
bool search_maps(const std::vector<std::vector<std::size_t>>& candidates, PairOk&& pair_ok,
                 Visit&& visit) {
  const std::size_t n = candidates.size();
  Map map(n, 0);
  if (n == 0) return visit(map);
  for (const auto& c : candidates) {
    if (c.empty()) return true;
  }
  std::vector<std::size_t> cursor(n, 0);
  std::size_t depth = 0;
  while (true) {
    if (cursor[depth] == candidates[depth].size()) {
      if (depth == 0) return true;
      cursor[depth] = 0;
      --depth;
      ++cursor[depth];
      continue;
    }
    map[depth] = candidates[depth][cursor[depth]];
    if (!pair_ok(map, depth)) {
      ++cursor[depth];
      continue;
    }
    if (depth + 1 == n) {
      if (!visit(map)) return false;
      ++cursor[depth];
      continue;
    }
    ++depth;
  }
}

/// Every value 0..m-1 for each of n points.
inline std::vector<std::vector<std::size_t>> all_candidates(std::size_t n, std::size_t m) {
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  return std::vector<std::vector<std::size_t>>(n, all);
}

/// All set partitions of {0..n-1} as restricted-growth label vectors.
std::vector<std::vector<int>> set_partitions(std::size_t n);

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Map> permutations(std::size_t n);

/// Surjections {0..n-1} → {0..m-1}.
std::vector<Map> surjections(std::size_t n, std::size_t m);

}  // namespace equilog
