#pragma once

#include "equilog/quantale.hpp"
#include "equilog/report.hpp"
#include "equilog/search.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace equilog {

/// A finite V-category (X, a): carrier names plus a V-valued matrix a(x, x').
///
/// Objects built by the library satisfy reflexivity and transitivity; objects read from
/// user input may not, and `verify_vcat` reports which axiom fails.
class VCatObj {
 public:
  VCatObj() = default;
  VCatObj(Quantale q, std::vector<std::string> carrier);  // all entries ⊥ off the diagonal, k on it
  VCatObj(Quantale q, std::vector<std::string> carrier, std::vector<Value> entries);

  const Quantale& quantale() const { return quantale_; }
  const std::vector<std::string>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }

  const Value& operator()(std::size_t x, std::size_t y) const { return entries_[x * size() + y]; }
  void set(std::size_t x, std::size_t y, Value v);
  const std::vector<Value>& entries() const { return entries_; }

  /// Induced preorder x ≤ y iff k ≤ a(x, y).
  bool below(std::size_t x, std::size_t y) const;
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const VCatObj&, const VCatObj&) = default;

  /// Discrete objects: a(x,x) = k, ⊥ elsewhere.
  static VCatObj discrete(Quantale q, std::vector<std::string> carrier);
  /// Indiscrete objects: ⊤ everywhere.
  static VCatObj indiscrete(Quantale q, std::vector<std::string> carrier);
  /// Preorder over Two from a predicate `le(x, y)`.
  static VCatObj preorder(std::vector<std::string> carrier,
                          const std::function<bool(std::size_t, std::size_t)>& le);
  /// The chain 0 < 1 < ... < n-1 over Two.
  static VCatObj chain(std::size_t n);

 private:
  Quantale quantale_;
  std::vector<std::string> carrier_;
  std::vector<Value> entries_;
};

/// A V-functor together with its endpoints.
struct VFunctor {
  VCatObj dom;
  VCatObj cod;
  Map map;
};

Report verify_vcat(const VCatObj& x);
bool is_vfunctor(const VCatObj& dom, const VCatObj& cod, const Map& f);
/// a(x, x') = b(f x, f x') for all x, x'.
bool is_initial(const VCatObj& dom, const VCatObj& cod, const Map& f);

/// One map of an initial source: carrier → target.
struct SourceLeg {
  std::reference_wrapper<const VCatObj> target;
  Map map;
};

/// Largest structure on `carrier` making every leg a V-functor: the pointwise meet of the
/// pulled-back structures (⊤ everywhere for an empty source).
VCatObj initial_structure(const Quantale& q, std::vector<std::string> carrier,
                          std::span<const SourceLeg> source);

/// Final structure on the codomain of the surjection p: pushforward by joins, k on the
/// diagonal, then closed under ⊗-matrix squaring. `x` need not be transitive.
VCatObj quotient_closure(const VCatObj& x, const Map& p, std::vector<std::string> names);
/// Same, naming each quotient point by the list of its preimages.
VCatObj quotient_closure(const VCatObj& x, const Map& p, std::size_t target_size);

bool is_separated(const VCatObj& x);
/// Quotient by x ≃ x' (x ≤ x' ≤ x); the map is the projection.
VFunctor separated_reflection(const VCatObj& x);

/// Presheaf object X̂ with the embedding x ↦ a(-, x). Only for Two and Diamond.
VFunctor presheaf_embed(const VCatObj& x);

struct ProductCone {
  VCatObj object;  // carrier indexed i * |y| + j
  Map first;
  Map second;
};
/// Cartesian product with meet structure.
ProductCone vcat_product(const VCatObj& x, const VCatObj& y);

struct CoproductCocone {
  VCatObj object;  // x's points first, then y's
  Map first;
  Map second;
};
CoproductCocone vcat_coproduct(const VCatObj& x, const VCatObj& y);

/// Restriction of the structure to `points` (initial along the inclusion).
VCatObj vcat_subobject(const VCatObj& x, const std::vector<std::size_t>& points);

/// Every V-functor dom → cod; BoundExceeded when more than `limit` exist.
std::vector<Map> enumerate_vfunctors(const VCatObj& dom, const VCatObj& cod,
                                     std::size_t limit = 1u << 20);
/// Every valid V-category structure on n points whose entries come from `values`.
std::vector<VCatObj> enumerate_structures(const Quantale& q, std::size_t n,
                                          std::span<const Value> values);

struct ExponentialOptions {
  /// Upper bound on |carrier of Y^X|.
  std::size_t max_functors = 4096;
  /// Competitor objects used by the built-in universal-property audit (0 disables it).
  std::size_t ump_competitor_carrier = 2;
};

struct Exponential {
  VCatObj object;           // carrier: the V-functors x → y
  std::vector<Map> points;  // points[i] is the functor named object.carrier()[i]
  VFunctor evaluation;      // (object × x) → y, (f, x) ↦ f(x)
};

/// Y^X with c(f, g) = ⋀ hom(a(x,x'), b(f x, g x')). Throws ConstructionRejected if the
/// audit finds a competitor without a unique transpose.
Exponential vcat_exponential(const VCatObj& x, const VCatObj& y, ExponentialOptions opts = {});

/// Transpose audit used by vcat_exponential, exposed for the oracle: for every competitor
/// z on at most `competitor_carrier` points, V-functors z×x → y correspond bijectively to
/// V-functors z → exponent via currying. Returns a failure description or nullopt.
std::optional<std::string> audit_exponential(const VCatObj& x, const VCatObj& y,
                                             const Exponential& e,
                                             std::size_t competitor_carrier);

/// Name of a map as "[a,b,...]" of image names.
std::string map_name(const VCatObj& cod, const Map& f);

}  // namespace equilog
