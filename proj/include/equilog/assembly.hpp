#pragma once

#include "equilog/pequ.hpp"
#include "equilog/report.hpp"
#include "equilog/search.hpp"
#include "equilog/vcat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace equilog {

/// Elements with nonempty sets of realizers in a base V-category. Realizer lists hold
/// carrier indices, sorted and duplicate-free.
struct Assembly {
  std::vector<std::string> elements;
  VCatObj base;
  std::vector<std::vector<std::size_t>> realizers;

  std::size_t size() const { return elements.size(); }
  friend bool operator==(const Assembly&, const Assembly&) = default;
};

/// Sorts and deduplicates realizer lists; throws InputError on empty or out-of-range ones.
Assembly make_assembly(std::vector<std::string> elements, VCatObj base,
                       std::vector<std::vector<std::size_t>> realizers);
/// "base", "nonempty-realizers", "realizers-in-carrier"; "modest" is informational only.
Report verify_assembly(const Assembly& a);
bool is_modest(const Assembly& a);

/// A base morphism g with g(E(a)) ⊆ E(f a) for all a, if one exists.
std::optional<Map> track_check(const Map& f, const Assembly& from, const Assembly& to);
/// Every assembly morphism from → to, as functions on elements.
std::vector<Map> enumerate_assembly_morphisms(const Assembly& from, const Assembly& to);

/// Product base with E(a, b) = E(a) × E(b); elements indexed i * |to| + j.
Assembly assm_product(const Assembly& x, const Assembly& y);

struct AssmExponential {
  Assembly object;           // elements: the tracked functions, named "[b,..]"
  std::vector<Map> functions;
  Exponential exponential;   // base data
  /// Evaluation object × x → y on elements; domain indexed as in assm_product.
  Map evaluation;
};
AssmExponential assm_exponential(const Assembly& x, const Assembly& y, ExponentialOptions opts = {});

struct ModestReflection {
  Assembly object;
  Map unit;  // element ↦ its class
};
/// Quotient by the equivalence generated by overlapping realizer sets.
ModestReflection modest_reflection(const Assembly& a);

struct RegularSubobject {
  std::vector<std::size_t> subset;
  Assembly object;
  Map inclusion;
  /// The cofork g, h : a → q whose equalizer is the inclusion (found or not).
  bool certified = false;
  std::string certificate;
};
/// One subassembly per subset of elements, each with a regularity certificate search that
/// checks the equalizer property against competitors with at most `competitor_elements`
/// elements over bases with at most `competitor_carrier` points.
std::vector<RegularSubobject> regular_subobjects(const Assembly& a, std::size_t competitor_elements = 2,
                                                 std::size_t competitor_carrier = 2);

/// x ~ x' iff both realize a common element. Throws InputError unless `a` is modest.
PEquObj mdst_to_pequ(const Assembly& a);
/// Elements are the blocks of the relation, each realized by itself.
Assembly pequ_to_mdst(const PEquObj& p);
/// Assembly morphism f tracked by g becomes the class of g.
Map mdst_to_pequ_morphism(const Assembly& from, const Assembly& to, const Map& f);
/// The class of g becomes the induced function on blocks.
Map pequ_to_mdst_morphism(const PEquObj& from, const PEquObj& to, const Map& g);

/// An element bijection tracked in both directions.
std::optional<Map> find_assembly_isomorphism(const Assembly& a, const Assembly& b);

}  // namespace equilog
