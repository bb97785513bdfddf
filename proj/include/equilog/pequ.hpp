#pragma once

#include "equilog/equ.hpp"
#include "equilog/per.hpp"
#include "equilog/vcat.hpp"

namespace equilog {

/// A V-category with a partial equivalence relation on its carrier.
struct PEquObj {
  VCatObj base;
  Per per;

  friend bool operator==(const PEquObj&, const PEquObj&) = default;
};

PEquObj make_pequ(VCatObj base, Per per);
/// Base axioms, plus "per-size". Injectivity of the base is the oracle's job.
Report verify_pequ(const PEquObj& p);

/// Restriction to the domain of the relation, with the initial structure along the
/// inclusion. `inclusion` receives the original index of each point of the result.
EquObj functor_R(const PEquObj& p, std::vector<std::size_t>* inclusion = nullptr);
/// R on a representative p → q: the restriction, reindexed into R(q).
Map functor_R_morphism(const PEquObj& p, const PEquObj& q, const Map& f);

/// Presheaf object of a separated base, with the relation carried along the embedding.
/// `embedding` receives ŷ.
PEquObj hat_pequ(const EquObj& e, Map* embedding = nullptr);

PEquObj pequ_product(const PEquObj& x, const PEquObj& y);

struct PEquExponential {
  PEquObj object;
  Exponential exponential;  // base data, including the evaluation functor
  /// The evaluation object × x → y; its domain is pequ_product(object, x).
  Map evaluation;
};

/// α ~ β iff x ~ x' ⇒ α(x) ~ β(x').
PEquExponential pequ_exponential(const PEquObj& x, const PEquObj& y, ExponentialOptions opts = {});

}  // namespace equilog
