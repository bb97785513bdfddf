#include "equilog/search.hpp"

#include <algorithm>
#include <numeric>

namespace equilog {

std::vector<std::vector<int>> set_partitions(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> labels(n, 0);
  // restricted growth strings: labels[i] <= 1 + max(labels[0..i-1])
  auto rec = [&](auto&& self, std::size_t i, int max_label) -> void {
    if (i == n) {
      out.push_back(labels);
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      labels[i] = l;
      self(self, i + 1, std::max(max_label, l));
    }
  };
  rec(rec, 0, -1);
  return out;
}

std::vector<Map> permutations(std::size_t n) {
  Map p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Map> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Map> surjections(std::size_t n, std::size_t m) {
  std::vector<Map> out;
  search_maps(all_candidates(n, m), [](const Map&, std::size_t) { return true; },
              [&](const Map& f) {
                std::vector<bool> hit(m, false);
                for (auto y : f) hit[y] = true;
                if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
                  out.push_back(f);
                }
                return true;
              });
  return out;
}

}  // namespace equilog
