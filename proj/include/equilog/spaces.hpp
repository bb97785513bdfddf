#pragma once

#include "equilog/ext_real.hpp"
#include "equilog/report.hpp"
#include "equilog/search.hpp"
#include "equilog/vcat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace equilog {

/// Subset of a finite carrier as a bitmask (bit i = point i).
using Subset = std::uint32_t;

/// Largest carrier for which approach-distance tables (n·2^n entries) are stored.
inline constexpr std::size_t kMaxApproachCarrier = 6;
/// Largest carrier for finite topologies (subsets are 32-bit masks).
inline constexpr std::size_t kMaxTopologyCarrier = 16;

/// A finite topological space given by its family of open sets.
class FinTop {
 public:
  FinTop() = default;
  /// Opens are deduplicated and sorted; axioms are not enforced here (see verify_space).
  FinTop(std::vector<std::string> carrier, std::vector<Subset> opens);

  const std::vector<std::string>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  const std::vector<Subset>& opens() const { return opens_; }
  bool is_open(Subset s) const;
  Subset whole() const { return size() == 0 ? 0 : static_cast<Subset>((1ull << size()) - 1); }

  friend bool operator==(const FinTop&, const FinTop&) = default;

 private:
  std::vector<std::string> carrier_;
  std::vector<Subset> opens_;
};

/// A finite approach space: δ(x, A) for every point and every subset.
class FinApp {
 public:
  FinApp() = default;
  /// `table[x * 2^n + A]` = δ(x, A). Throws BoundExceeded above kMaxApproachCarrier.
  FinApp(std::vector<std::string> carrier, std::vector<ExtReal> table);

  const std::vector<std::string>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  std::size_t subset_count() const { return std::size_t{1} << size(); }
  const ExtReal& distance(std::size_t x, Subset a) const { return table_[x * subset_count() + a]; }
  const std::vector<ExtReal>& table() const { return table_; }

  friend bool operator==(const FinApp&, const FinApp&) = default;

 private:
  std::vector<std::string> carrier_;
  std::vector<ExtReal> table_;
};

Report verify_space(const FinTop& s);
Report verify_space(const FinApp& s);

bool is_continuous(const FinTop& dom, const FinTop& cod, const Map& f);
/// δ(x, A) ≥ δ'(f x, f[A]) for all x, A.
bool is_contraction(const FinApp& dom, const FinApp& cod, const Map& f);

Subset image(const Map& f, Subset a);
Subset preimage(const Map& f, Subset b, std::size_t dom_size);

// Transfers between the base categories, on structures. Carriers are preserved.

/// d(x, x') = 0 if x ≤ x', ∞ otherwise.
VCatObj ord_to_met(const VCatObj& ord);
/// x ≤ x' iff d(x, x') < ∞.
VCatObj met_to_ord(const VCatObj& met);
/// Alexandroff topology: open sets generated by the down-sets ↓x.
FinTop ord_to_top(const VCatObj& ord);
/// Specialization order: x ≤ x' iff every open set containing x' contains x.
VCatObj top_to_ord(const FinTop& top);
/// δ(x', A) = inf{ d(x, x') | x ∈ A }.
FinApp met_to_app(const VCatObj& met);
/// d(x, x') = sup{ δ(x', A) | x ∈ A }.
VCatObj app_to_met(const FinApp& app);
/// δ(x', A) = 0 iff some principal ultrafilter at a point of A converges to x'.
FinApp top_to_app(const FinTop& top);
/// Convergence ẋ → x' iff δ(x', {x}) < ∞, closed reflexively and transitively, then
/// the Alexandroff topology of that preorder.
FinTop app_to_top(const FinApp& app);

FinTop top_product(const FinTop& x, const FinTop& y);
FinTop top_coproduct(const FinTop& x, const FinTop& y);
FinTop top_subspace(const FinTop& x, const std::vector<std::size_t>& points);
FinApp app_product(const FinApp& x, const FinApp& y);
FinApp app_coproduct(const FinApp& x, const FinApp& y);
FinApp app_subspace(const FinApp& x, const std::vector<std::size_t>& points);

/// Every topology on n points (brute force over families of subsets; n ≤ 4).
std::vector<FinTop> enumerate_topologies(std::size_t n);

}  // namespace equilog
