#pragma once

#include "equilog/assembly.hpp"
#include "equilog/equ.hpp"
#include "equilog/pequ.hpp"
#include "equilog/per.hpp"
#include "equilog/spaces.hpp"
#include "equilog/vcat.hpp"

#include <random>
#include <span>
#include <vector>

namespace equilog {

/// Every valid structure on n points over q with entries from `values`, optionally one
/// per isomorphism class.
std::vector<VCatObj> structures(const Quantale& q, std::size_t n, std::span<const Value> values,
                                bool iso_reduced);
/// Same, for every size 0..max_n.
std::vector<VCatObj> structures_up_to(const Quantale& q, std::size_t max_n,
                                      std::span<const Value> values, bool iso_reduced);

/// Every partial equivalence relation on n points (domain any subset).
std::vector<Per> partial_partitions(std::size_t n);
/// Every equivalence relation on n points.
std::vector<Per> partitions(std::size_t n);

/// Equilogical objects over every given base with every equivalence relation. With
/// `iso_reduced`, one object per isomorphism class of (structure, relation) pairs.
std::vector<EquObj> equ_objects(std::span<const VCatObj> bases, bool iso_reduced);
std::vector<EquObj> equ_objects(std::span<const FinTop> bases);
std::vector<EquObj> equ_objects(std::span<const FinApp> bases);
/// Ord-Equ objects with carrier ≤ max_n.
std::vector<EquObj> ord_equ_universe(std::size_t max_n, bool iso_reduced);

/// Competitor objects in the category of `like`, one per isomorphism class for V-categories.
/// Finite quantales: every structure with carrier ≤ max_n. Real-valued quantales: every
/// structure on at most min(max_n, 2) points with entries from the default grid plus `extra`. Top: every
/// topology with carrier ≤ min(max_n, 3). App: the approach spaces of those metrics and
/// topologies on at most 2 points (every approach space on 2 points arises this way).
std::vector<EquObj> competitor_universe(const Base& like, std::size_t max_n,
                                        std::span<const Value> extra = {});
/// Real values occurring in a base (structure entries or approach distances).
std::vector<Value> occurring_values(const Base& b);

std::vector<PEquObj> pequ_objects(std::span<const VCatObj> bases, bool iso_reduced);

/// Assemblies over each base with 0..max_elements elements and every choice of nonempty
/// realizer sets.
std::vector<Assembly> assemblies(std::span<const VCatObj> bases, std::size_t max_elements,
                                 bool modest_only);

/// Point relabelling: a label-free code of a structure with a relation; equal codes mean
/// isomorphic (as structured sets with a relation).
std::vector<std::int64_t> canonical_code(const VCatObj& x, const Per& p);

using Rng = std::mt19937_64;

/// Random entries from `values` (diagonal k), closed to a valid structure.
VCatObj random_structure(Rng& rng, const Quantale& q, std::size_t n, std::span<const Value> values);
Per random_partition(Rng& rng, std::size_t n);
Per random_partial_partition(Rng& rng, std::size_t n);
/// Alexandroff topology of a random preorder (every finite topology arises this way).
FinTop random_topology(Rng& rng, std::size_t n);
/// Approach space of a random metric with entries from `values`.
FinApp random_approach(Rng& rng, std::size_t n, std::span<const Value> values);

}  // namespace equilog
