#pragma once

// Brute-force helpers shared by the unit tests and the acceptance run. None of them call
// the library routine they are used to check.

#include "equilog/oracle.hpp"
#include "equilog/universe.hpp"

#include <string>
#include <vector>

namespace equilog::testing {

inline std::vector<std::string> point_names(std::size_t n, const std::string& prefix = "p") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline Value rv(std::int64_t n, std::int64_t d = 1) { return ExtReal(n, d); }
inline Value inf() { return ExtReal::infinity(); }

/// Two-valued structure from a list of strict pairs (i ≤ j), closed reflexively only.
inline VCatObj ord(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& below) {
  VCatObj x(Quantale(QuantaleKind::Two), point_names(n));
  for (auto [i, j] : below) x.set(i, j, true);
  return x;
}

inline VCatObj chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> below;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) below.emplace_back(i, j);
  }
  return ord(n, below);
}

inline VCatObj antichain(std::size_t n) { return ord(n, {}); }

/// Final structure on the image of p by the join over every walk of length ≤ m in the
/// pushed-forward relation.
inline VCatObj path_join_closure(const VCatObj& raw, const Map& p, std::size_t m) {
  const auto& q = raw.quantale();
  std::vector<Value> step(m * m, q.bottom());
  for (std::size_t x = 0; x < raw.size(); ++x) {
    for (std::size_t y = 0; y < raw.size(); ++y) {
      auto& cell = step[p[x] * m + p[y]];
      cell = q.join(cell, raw(x, y));
    }
  }
  std::vector<Value> out(m * m, q.bottom());
  for (std::size_t s = 0; s < m; ++s) {
    out[s * m + s] = q.unit();
    // depth-first over walks s = v0, v1, ..., vk with k ≤ m
    std::vector<std::pair<std::size_t, Value>> stack{{s, q.unit()}};
    std::vector<std::size_t> depth{0};
    while (!stack.empty()) {
      auto [v, acc] = stack.back();
      auto d = depth.back();
      stack.pop_back();
      depth.pop_back();
      if (d == m) continue;
      for (std::size_t w = 0; w < m; ++w) {
        Value next = q.tensor(acc, step[v * m + w]);
        out[s * m + w] = q.join(out[s * m + w], next);
        stack.emplace_back(w, next);
        depth.push_back(d + 1);
      }
    }
  }
  return VCatObj(q, point_names(m, "q"), out);
}

/// Injective objects among the V-categories over q with carrier ≤ max_n, up to iso.
inline std::vector<VCatObj> injective_bases(const Quantale& q, std::size_t max_n, std::size_t sweep_bound,
                                            bool separated_only = false) {
  SweepConfig sweep;
  sweep.max_carrier = sweep_bound;
  auto values = q.carrier();
  std::vector<VCatObj> out;
  for (auto& x : structures_up_to(q, max_n, values, true)) {
    if (separated_only && !is_separated(x)) continue;
    if (injectivity_test(x, sweep).passed) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace equilog::testing
