#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace equilog {

/// Exact element of [0, ∞]: a nonnegative rational or the symbol ∞.
class ExtReal {
 public:
  using Rational = boost::rational<std::int64_t>;

  ExtReal() = default;
  ExtReal(std::int64_t n);  // NOLINT(google-explicit-constructor)
  ExtReal(std::int64_t num, std::int64_t den);
  explicit ExtReal(Rational r);

  static ExtReal infinity();

  bool is_infinite() const { return infinite_; }
  const Rational& finite() const { return value_; }

  /// Ordinary addition with ∞ absorbing.
  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  /// Truncated subtraction max(a - b, 0); ∞ - finite = ∞, anything - ∞ = 0.
  ExtReal monus(const ExtReal& b) const;

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

  /// "p/q", "n" or "inf".
  std::string str() const;
  static ExtReal parse(std::string_view text);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

}  // namespace equilog
