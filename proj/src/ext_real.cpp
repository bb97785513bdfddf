#include "equilog/ext_real.hpp"

#include "equilog/errors.hpp"

#include <charconv>

namespace equilog {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("not an exact nonnegative rational: '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

ExtReal::ExtReal(std::int64_t n) : ExtReal(Rational(n)) {}

ExtReal::ExtReal(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  *this = ExtReal(Rational(num, den));
}

ExtReal::ExtReal(Rational r) : value_(r) {
  if (r < 0) throw InputError("extended reals must be nonnegative");
}

ExtReal ExtReal::infinity() {
  ExtReal out;
  out.infinite_ = true;
  return out;
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.infinite_ || b.infinite_) return ExtReal::infinity();
  return ExtReal(a.value_ + b.value_);
}

ExtReal ExtReal::monus(const ExtReal& b) const {
  if (b.infinite_) return ExtReal();
  if (infinite_) return infinity();
  if (value_ <= b.value_) return ExtReal();
  return ExtReal(value_ - b.value_);
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtReal::str() const {
  if (infinite_) return "inf";
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

ExtReal ExtReal::parse(std::string_view text) {
  if (text == "inf" || text == "∞") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExtReal(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  return ExtReal(num, den);
}

}  // namespace equilog
