#pragma once

#include "equilog/ext_real.hpp"
#include "equilog/report.hpp"

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace equilog {

/// Element of the diamond lattice 2×2: bot=(0,0), u=(1,0), v=(0,1), top=(1,1).
struct DiamondValue {
  bool left = false;
  bool right = false;
  friend auto operator<=>(const DiamondValue&, const DiamondValue&) = default;
};

/// Payload of a quantale element. Which alternative is live is fixed by the quantale kind:
/// bool for Two, DiamondValue for Diamond, ExtReal for the two reversed-order quantales.
using Value = std::variant<bool, DiamondValue, ExtReal>;

enum class QuantaleKind {
  Two,           // ({⊥,⊤}, ∧, ⊤)
  Diamond,       // ({⊥,u,v,⊤}, ∧, ⊤)
  PlusReversed,  // ([0,∞]^op, +, 0)
  MaxReversed,   // ([0,∞]^op, max, 0)
};

/// A commutative unital quantale that is also a Heyting algebra.
///
/// For the reversed quantales the lattice order is the numeric order flipped: ⊤ = 0, ⊥ = ∞,
/// joins are numeric minima and meets numeric maxima.
class Quantale {
 public:
  explicit Quantale(QuantaleKind kind = QuantaleKind::Two) : kind_(kind) {}

  QuantaleKind kind() const { return kind_; }
  bool is_finite() const;

  Value unit() const;
  Value top() const;
  Value bottom() const;

  bool contains(const Value& v) const;
  bool leq(const Value& a, const Value& b) const;
  Value tensor(const Value& a, const Value& b) const;
  Value join(const Value& a, const Value& b) const;
  Value meet(const Value& a, const Value& b) const;
  /// Right adjoint of ⊗: the largest u with u ⊗ v ≤ w.
  Value hom(const Value& v, const Value& w) const;
  /// Right adjoint of ∧: the largest u with u ∧ v ≤ w.
  Value implies(const Value& v, const Value& w) const;

  /// Entire carrier; throws InputError for the infinite quantales.
  std::vector<Value> carrier() const;
  /// {0, 1/2, 1, 2, 3, ∞} for the reversed quantales, the carrier otherwise.
  std::vector<Value> default_grid() const;

  std::string format(const Value& v) const;
  Value parse(std::string_view text) const;
  std::string name() const;
  static Quantale from_name(std::string_view name);

  friend bool operator==(const Quantale&, const Quantale&) = default;

 private:
  QuantaleKind kind_;
};

/// Hom-residual; free-function spelling used throughout.
Value hom_residual(const Quantale& q, const Value& v, const Value& w);

/// The operations of a quantale as replaceable callables. Law checks accept broken tables.
struct QuantaleSignature {
  std::function<bool(const Value&, const Value&)> leq;
  std::function<Value(const Value&, const Value&)> tensor;
  std::function<Value(const Value&, const Value&)> join;
  std::function<Value(const Value&, const Value&)> meet;
  std::function<Value(const Value&, const Value&)> hom;
  std::function<Value(const Value&, const Value&)> implies;
  std::function<std::string(const Value&)> format;
  Value unit;
  Value top;
  Value bottom;

  static QuantaleSignature of(const Quantale& q);
};

/// Law report over a finite probe: associativity, commutativity, unit, join-preservation,
/// residuation, heyting, integrality, distributivity and lattice-order consistency.
Report verify_quantale(const Quantale& q, std::span<const Value> probe);
Report verify_laws(const QuantaleSignature& sig, std::span<const Value> probe);

/// Whether w ∧ (u⊗v) = ⋁{u'⊗v' | u' ≤ u, v' ≤ v, u'⊗v' ≤ w} for all u, v, w in the probe.
/// u' and v' range over the closure of the probe under hom, ∧ and ∨.
bool check_exp_condition(const Quantale& q, std::span<const Value> probe);

/// Closure of `seed` under hom, ∧ and ∨, capped at `limit` elements (BoundExceeded beyond).
std::vector<Value> residual_closure(const Quantale& q, std::span<const Value> seed,
                                    std::size_t limit = 512);

}  // namespace equilog
