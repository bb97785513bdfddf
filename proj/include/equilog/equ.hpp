#pragma once

#include "equilog/base.hpp"
#include "equilog/per.hpp"
#include "equilog/report.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace equilog {

/// A base object with an equivalence relation on its carrier.
struct EquObj {
  Base base;
  Per equiv;

  friend bool operator==(const EquObj&, const EquObj&) = default;
};

/// Throws InputError unless `equiv` is a total relation on the carrier of `base`.
EquObj make_equ(Base base, Per equiv);
Report verify_equ_object(const EquObj& e);

/// One representative of a morphism class.
struct MorphClass {
  EquObj dom;
  EquObj cod;
  Map rep;
};

/// x ~ x' ⇒ f x ~ f x' (for partial relations this includes "defined goes to defined").
bool is_equivariant(const Per& dom, const Per& cod, const Map& f);
/// The class relation on representatives: x ~ x' ⇒ f x ~ g x', checked over all pairs.
bool same_class(const Per& dom, const Per& cod, const Map& f, const Map& g);

/// Checks "base-morphism" and "equivariance" separately.
Report verify_equ_morphism(const MorphClass& f);
/// Throws InputError when f and g do not share dom and cod.
bool morph_equal(const MorphClass& f, const MorphClass& g);

/// g ∘ f on underlying maps.
Map compose(const Map& g, const Map& f);
MorphClass compose(const MorphClass& g, const MorphClass& f);
MorphClass identity(const EquObj& e);

/// Canonical name of a class: the codomain block of the image of each domain block.
/// Two equivariant maps have the same key iff they are in the same class.
struct ClassKey {
  static constexpr std::size_t kCapacity = 40;
  std::array<std::uint8_t, kCapacity> labels{};
  std::uint8_t size = 0;

  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

/// First element of each block, in block order.
std::vector<std::size_t> block_representatives(const Per& p);
ClassKey class_key(const std::vector<std::size_t>& dom_reps, const Per& cod, const Map& f);
ClassKey class_key(const Per& dom, const Per& cod, const Map& f);

struct ClassRep {
  ClassKey key;
  Map rep;
};

/// Every class of equivariant base morphisms, each with its lexicographically first
/// representative, in order of that representative. BoundExceeded past `limit` classes.
std::vector<ClassRep> enumerate_classes(const Base& xb, const Per& xp, const Base& yb,
                                        const Per& yp, std::size_t limit = 1u << 16);
std::vector<ClassRep> enumerate_classes(const EquObj& x, const EquObj& y);

/// An isomorphism of equilogical objects: classes there and back composing to identities.
struct Isomorphism {
  Map forward;
  Map backward;
};
std::optional<Isomorphism> find_isomorphism(const Base& ab, const Per& ap, const Base& bb,
                                            const Per& bp);
std::optional<Isomorphism> find_isomorphism(const EquObj& a, const EquObj& b);

struct MonoEpi {
  bool mono = false;
  bool epi = false;
};
/// mono iff x ≡ x' ⇔ f x ≡ f x'; epi iff every codomain class meets the image.
MonoEpi classify_mono_epi(const MorphClass& f);

enum class LimitKind { Product, Coproduct, Equalizer, Coequalizer, Terminal, Initial };
LimitKind limit_kind_from_name(std::string_view name);
std::string limit_kind_name(LimitKind kind);

/// The object of a (co)limit with its legs: projections or injections for (co)products,
/// the inclusion for equalizers, the quotient map for coequalizers, none otherwise.
struct Cone {
  EquObj object;
  std::vector<Map> legs;
};

Cone equ_product(const EquObj& x, const EquObj& y);
Cone equ_coproduct(const EquObj& x, const EquObj& y);
/// f, g : x → y.
Cone equ_equalizer(const EquObj& x, const EquObj& y, const Map& f, const Map& g);
Cone equ_coequalizer(const EquObj& x, const EquObj& y, const Map& f, const Map& g);
Cone equ_terminal(const Base& like);
Cone equ_initial(const Base& like);

/// Dispatch on kind: two objects for (co)products, one parallel pair for (co)equalizers,
/// one object (only its category is used) for terminal and initial.
Cone limit_colimit(LimitKind kind, std::span<const EquObj> objects,
                   std::span<const MorphClass> arrows);

// Transfers of equilogical objects between base categories.

enum class TransferPair { OrdMet, OrdTop, MetApp, TopApp };
/// Rightward: Ord→Met, Ord→Top, Met→App, Top→App. Leftward is the reverse.
enum class Direction { Rightward, Leftward };

TransferPair transfer_pair_from_name(std::string_view name);
std::string transfer_pair_name(TransferPair pair);

/// Applies the transfer to the base; carrier and equivalence are kept.
EquObj adjunction_transfer(const EquObj& obj, TransferPair which, Direction direction);
Base transfer_base(const Base& b, TransferPair which, Direction direction);
/// Category name accepted as input by the transfer ("two", "plus", "top", "app").
std::string transfer_source(TransferPair which, Direction direction);

}  // namespace equilog
