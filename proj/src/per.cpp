#include "equilog/per.hpp"

#include "equilog/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace equilog {

Per::Per(std::vector<int> labels) {
  std::map<int, int> renumber;
  labels_.reserve(labels.size());
  for (int l : labels) {
    if (l < 0) {
      labels_.push_back(-1);
      continue;
    }
    auto [it, fresh] = renumber.try_emplace(l, static_cast<int>(renumber.size()));
    labels_.push_back(it->second);
  }
}

Per Per::discrete(std::size_t n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  return Per(std::move(l));
}

Per Per::full(std::size_t n) { return Per(std::vector<int>(n, 0)); }

Per Per::empty(std::size_t n) { return Per(std::vector<int>(n, -1)); }

Per Per::from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<int> l(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto x : blocks[b]) {
      if (x >= n) throw InputError("block mentions point " + std::to_string(x) + " outside carrier");
      if (l[x] >= 0) throw InputError("blocks overlap at point " + std::to_string(x));
      l[x] = static_cast<int>(b);
    }
  }
  return Per(std::move(l));
}

Per Per::from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw InputError("relation pair outside carrier");
    rel[x][y] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (rel[x][y] && !rel[y][x]) {
        throw InputError("relation is not symmetric at (" + std::to_string(x) + "," +
                         std::to_string(y) + ")");
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (rel[x][y] && rel[y][z] && !rel[x][z]) {
          throw InputError("relation is not transitive at (" + std::to_string(x) + "," +
                           std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  std::vector<int> l(n, -1);
  int next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (!rel[x][x] || l[x] >= 0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (rel[x][y]) l[y] = next;
    }
    ++next;
  }
  return Per(std::move(l));
}

Per Per::equivalence_closure(std::size_t n,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw InputError("relation pair outside carrier");
    auto a = find(x), b = find(y);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> l(n);
  for (std::size_t x = 0; x < n; ++x) l[x] = static_cast<int>(find(x));
  return Per(std::move(l));
}

std::size_t Per::block_count() const {
  int top = -1;
  for (int l : labels_) top = std::max(top, l);
  return static_cast<std::size_t>(top + 1);
}

bool Per::is_total() const {
  return std::all_of(labels_.begin(), labels_.end(), [](int l) { return l >= 0; });
}

std::vector<std::vector<std::size_t>> Per::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count());
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    if (labels_[x] >= 0) out[static_cast<std::size_t>(labels_[x])].push_back(x);
  }
  return out;
}

std::vector<std::size_t> Per::domain() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    if (labels_[x] >= 0) out.push_back(x);
  }
  return out;
}

}  // namespace equilog
