#pragma once

#include "equilog/equ.hpp"
#include "equilog/report.hpp"
#include "equilog/vcat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace equilog {

/// A parallel pair r1, r2 : x1 → x0 of V-functors, optionally with reflexivity (r),
/// symmetry (s) and transitivity (t) witnesses.
struct PseudoEqRel {
  VCatObj x1;
  VCatObj x0;
  Map r1;
  Map r2;
  std::optional<Map> r;
  std::optional<Map> s;
  std::optional<Map> t;

  friend bool operator==(const PseudoEqRel&, const PseudoEqRel&) = default;
};

/// The pullback x2 = {(p, q) | r2 p = r1 q} of a span, with its projections r3, r4.
struct SpanPullback {
  VCatObj object;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  Map r3;
  Map r4;
};
SpanPullback span_pullback(const PseudoEqRel& p);

/// Largest filtered witness search space (product of candidate counts) tried before refusing.
inline constexpr double kWitnessSearchBound = 1e7;

struct PerVerdict {
  Report report;  // "legs", "reflexivity", "symmetry", "transitivity", "regmono"
  std::optional<Map> r;
  std::optional<Map> s;
  std::optional<Map> t;
  bool regmono = false;

  bool witnesses_found() const { return r && s && t; }
};
/// Searches for witnesses (supplied ones are checked first). BoundExceeded when a search
/// space exceeds kWitnessSearchBound.
PerVerdict verify_per(const PseudoEqRel& p);
/// ⟨r1, r2⟩ is injective and x1 carries the initial structure for the pair.
bool is_regmono(const PseudoEqRel& p);

/// E = {(x, x') | x ≡ x'} with the structure induced by the two projections.
PseudoEqRel equ_per_roundtrip(const EquObj& e);
/// x ≡ x' iff some point of x1 has legs (x, x'). Requires a regular-mono span.
EquObj per_to_equ(const PseudoEqRel& p);
/// {(x, x') | f x = f x'} with explicit diagonal, swap and composition witnesses.
PseudoEqRel kernel_pair(const VFunctor& f);

struct KernelPairCertificate {
  VFunctor quotient;    // x0 → x0/∼ with the final structure
  PseudoEqRel kernel;   // kernel pair of the quotient
  std::optional<Map> iso;  // x1 → kernel.x1, commuting with both legs
};
KernelPairCertificate per_as_kernel_pair(const PseudoEqRel& p);

struct Reflection {
  EquObj object;
  Map unit;  // identity on x0
};
/// ≡ is the image of ⟨r1, r2⟩; requires witnesses.
Reflection reflect_to_equ(const PseudoEqRel& p);

PseudoEqRel span_product(const PseudoEqRel& p, const PseudoEqRel& q);

/// Maps f0 : p.x0 → q.x0 that admit f1 : p.x1 → q.x1 commuting with both legs,
/// up to the relation f0 ~ g0 iff some h : p.x0 → q.x1 has r1 h = f0 and r2 h = g0.
/// Returns one representative per class.
std::vector<Map> span_morphism_classes(const PseudoEqRel& p, const PseudoEqRel& q);

/// Base object, a set, and a map from the set into the carrier.
struct RegTriple {
  VCatObj base;
  std::vector<std::string> elements;
  Map sigma;
};
/// (X̂, |X|, ŷ).
RegTriple triple_embed(const VCatObj& x);
/// A V-functor g with g ∘ σ = σ' ∘ f, if any.
std::optional<Map> triple_morphism_check(const Map& f, const RegTriple& from, const RegTriple& to);
/// The elements with the initial structure along σ.
VCatObj triple_initial_lifting(const RegTriple& t);
/// Element bijections f with f and its inverse both admitting base squares.
std::optional<Map> find_triple_isomorphism(const RegTriple& a, const RegTriple& b);

}  // namespace equilog
