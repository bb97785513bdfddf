#pragma once

#include "equilog/assembly.hpp"
#include "equilog/completion.hpp"
#include "equilog/equ.hpp"
#include "equilog/pequ.hpp"
#include "equilog/vcat.hpp"

#include <chrono>
#include <span>
#include <string>
#include <vector>

namespace equilog {

struct SweepConfig {
  std::size_t max_carrier = 3;
  /// Values for structures over the infinite quantales; empty means the default grid.
  std::vector<Value> grid;
  std::chrono::seconds time_budget{600};

  /// Defaults, with EQUILOG_MAX_CARRIER overriding max_carrier when set.
  static SweepConfig from_env();
  std::vector<Value> values(const Quantale& q) const;
};

/// Throws BoundExceeded once the budget has elapsed.
class Deadline {
 public:
  explicit Deadline(std::chrono::seconds budget);
  void check() const;

 private:
  std::chrono::steady_clock::time_point end_;
};

/// Outcome of an oracle run. A pass always holds only up to the stated bound.
struct Verdict {
  bool passed = true;
  std::string certificate;  // counterexample on failure
  std::size_t instances = 0;
  std::string bound;

  void fail(std::string why) {
    if (passed) {
      passed = false;
      certificate = std::move(why);
    }
  }
};

std::vector<ClassRep> enumerate_morphclasses(const EquObj& x, const EquObj& y);
std::vector<ClassRep> enumerate_morphclasses(const PEquObj& x, const PEquObj& y);
/// Assembly morphisms are functions, so classes are the functions themselves.
std::vector<Map> enumerate_morphclasses(const Assembly& x, const Assembly& y);

/// Existence and uniqueness of mediating classes for every competitor. `objects` and
/// `arrows` are the inputs as given to limit_colimit.
Verdict verify_universal_property(LimitKind kind, const Cone& candidate,
                                  std::span<const EquObj> objects,
                                  std::span<const MorphClass> arrows,
                                  std::span<const EquObj> competitors);

/// Mono / epi by left / right cancellation against the competitors.
MonoEpi cancellation_mono_epi(const MorphClass& f, std::span<const EquObj> competitors);

/// Left adjoint L : C → D and right adjoint R : D → C of a transfer pair. C is the
/// category transfer_source(pair, left) reads from.
struct AdjointPair {
  TransferPair pair;
  Direction left;   // direction in which the left adjoint runs
  Direction right;
};
AdjointPair adjoint_pair(TransferPair pair);
/// For each a in `c_objects` and b in `d_objects`: morphisms L a → b and a → R b are
/// the same maps, the unit a → R L a and counit L R b → b are morphisms. `flipped`
/// swaps the roles of the two functors (a must then come from D and b from C).
Verdict verify_adjunction(TransferPair pair, std::span<const EquObj> c_objects,
                          std::span<const EquObj> d_objects, bool flipped = false);

/// Extension of every f : S → z along every subspace inclusion S ⊆ y, for y over the
/// quantale of z with at most sweep.max_carrier points, up to ≃.
Verdict injectivity_test(const VCatObj& z, const SweepConfig& sweep);

enum class Status { Pass, Fail, NotApplicable };
std::string status_name(Status s);
struct ConditionResult {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};
/// Conditions (a) to (f) for the V-categories over q at the sweep bound.
std::vector<ConditionResult> condition_suite(const Quantale& q, const SweepConfig& sweep);

/// The canonical comparison sep(x × y) → sep(x) × sep(y) is an isomorphism.
bool separation_preserves_product(const VCatObj& x, const VCatObj& y);
/// Bijection with both directions V-functors.
std::optional<Map> find_vcat_isomorphism(const VCatObj& a, const VCatObj& b);

// Universal properties beyond Equ.

/// Classes z × x → y correspond to classes z → exponent via ev ∘ (− × 1).
Verdict verify_pequ_exponential(const PEquObj& x, const PEquObj& y, const PEquExponential& e,
                                std::span<const PEquObj> competitors);
Verdict verify_assm_exponential(const Assembly& x, const Assembly& y, const AssmExponential& e,
                                std::span<const Assembly> competitors);
/// Morphisms into each modest competitor factor uniquely through the unit.
Verdict verify_modest_reflection(const Assembly& a, const ModestReflection& r,
                                 std::span<const Assembly> modest_competitors);
/// R maps classes p → q bijectively onto classes R p → R q.
Verdict verify_R_full_faithful(const PEquObj& p, const PEquObj& q);
/// Span morphism classes p → target correspond to Equ classes reflect(p) → per_to_equ(target).
Verdict verify_reflectivity(const PseudoEqRel& p, const PseudoEqRel& target);

}  // namespace equilog
