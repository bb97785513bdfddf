#pragma once

#include "equilog/report.hpp"
#include "equilog/search.hpp"
#include "equilog/spaces.hpp"
#include "equilog/vcat.hpp"

#include <string>
#include <variant>
#include <vector>

namespace equilog {

/// A base object: a V-category, a finite topological space or a finite approach space.
using Base = std::variant<VCatObj, FinTop, FinApp>;

const std::vector<std::string>& base_carrier(const Base& b);
std::size_t base_size(const Base& b);
/// "two", "diamond", "plus", "max", "top" or "app".
std::string base_category(const Base& b);
bool same_category(const Base& a, const Base& b);
void require_same_category(const Base& a, const Base& b);

Report verify_base(const Base& b);
bool is_base_morphism(const Base& dom, const Base& cod, const Map& f);
/// The structure of `dom` is the initial lifting of that of `cod` along f.
bool is_base_initial(const Base& dom, const Base& cod, const Map& f);

/// Product carrier is indexed i * |y| + j.
Base base_product(const Base& x, const Base& y);
Base base_coproduct(const Base& x, const Base& y);
Base base_subspace(const Base& x, const std::vector<std::size_t>& points);
/// One-point and empty objects of the category `like` lives in.
Base base_terminal(const Base& like);
Base base_initial(const Base& like);

/// Pairwise necessary condition for f to be a morphism, tabulated as
/// ok(i, j, u, v): sending i ↦ u and j ↦ v is compatible. Exact for V-categories; for
/// spaces it is the order (or distance) between points and the full check runs on leaves.
struct PairTable {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<char> cells;
  bool exact = true;

  bool ok(std::size_t i, std::size_t j, std::size_t u, std::size_t v) const {
    return cells[((i * n + j) * m + u) * m + v] != 0;
  }
};
PairTable pair_table(const Base& dom, const Base& cod);

/// Visits every morphism dom → cod whose point i takes a value in `candidates[i]` and which
/// `extra(map, i)` accepts. `visit` returns false to stop; the result is false if stopped.
template <class Extra, class Visit>
bool for_each_base_morphism(const Base& dom, const Base& cod,
                            const std::vector<std::vector<std::size_t>>& candidates,
                            Extra&& extra, Visit&& visit) {
  const PairTable table = pair_table(dom, cod);
  return search_maps(
      candidates,
      [&](const Map& f, std::size_t i) {
        for (std::size_t j = 0; j <= i; ++j) {
          if (!table.ok(i, j, f[i], f[j]) || !table.ok(j, i, f[j], f[i])) return false;
        }
        return extra(f, i);
      },
      [&](const Map& f) {
        if (!table.exact && !is_base_morphism(dom, cod, f)) return true;
        return visit(f);
      });
}

template <class Extra, class Visit>
bool for_each_base_morphism(const Base& dom, const Base& cod, Extra&& extra, Visit&& visit) {
  return for_each_base_morphism(dom, cod, all_candidates(base_size(dom), base_size(cod)),
                                std::forward<Extra>(extra), std::forward<Visit>(visit));
}

}  // namespace equilog
