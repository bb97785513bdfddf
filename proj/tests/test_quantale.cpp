#include "doctest.h"
#include "equilog/errors.hpp"
#include "equilog/quantale.hpp"
#include "support.hpp"

using namespace equilog;
using namespace equilog::testing;

namespace {

const Quantale kTwo(QuantaleKind::Two);
const Quantale kDiamond(QuantaleKind::Diamond);
const Quantale kPlus(QuantaleKind::PlusReversed);
const Quantale kMax(QuantaleKind::MaxReversed);

const DiamondValue kU{true, false};
const DiamondValue kV{false, true};

/// Largest u in the probe with u ⊗ v ≤ w, by scanning.
Value scan_hom(const Quantale& q, const std::vector<Value>& probe, const Value& v, const Value& w) {
  Value best = q.bottom();
  for (const auto& u : probe) {
    if (q.leq(q.tensor(u, v), w) && q.leq(best, u)) best = u;
  }
  return best;
}

}  // namespace

TEST_CASE("residual examples") {
  CHECK(kTwo.hom(true, false) == Value(false));
  CHECK(hom_residual(kPlus, rv(3), rv(5)) == rv(2));
  CHECK(kDiamond.hom(kU, kV) == Value(kV));
}

TEST_CASE("residual matches a scan over the probe") {
  for (const auto& q : {kTwo, kDiamond}) {
    auto all = q.carrier();
    for (const auto& v : all) {
      for (const auto& w : all) CHECK(q.hom(v, w) == scan_hom(q, all, v, w));
    }
  }
  std::vector<Value> grid{rv(0), rv(1, 2), rv(1), rv(2), rv(3), rv(5), inf()};
  for (const auto& q : {kPlus, kMax}) {
    for (const auto& v : grid) {
      for (const auto& w : grid) {
        auto h = q.hom(v, w);
        CHECK(q.leq(q.tensor(h, v), w));
        for (const auto& u : grid) CHECK(q.leq(u, h) == q.leq(q.tensor(u, v), w));
      }
    }
  }
}

TEST_CASE("integral: unit is top") {
  for (const auto& q : {kTwo, kDiamond, kPlus, kMax}) CHECK(q.unit() == q.top());
}

TEST_CASE("law reports on full carriers and grids") {
  CHECK(verify_quantale(kTwo, kTwo.carrier()).passed());
  auto d = verify_quantale(kDiamond, kDiamond.carrier());
  CHECK(d.passed());
  REQUIRE(d.find("distributivity") != nullptr);
  CHECK(d.find("distributivity")->passed);
  CHECK(verify_quantale(kPlus, kPlus.default_grid()).passed());
  CHECK(verify_quantale(kMax, kMax.default_grid()).passed());
}

TEST_CASE("a corrupted tensor fails the unit law with a witness") {
  auto sig = QuantaleSignature::of(kTwo);
  sig.tensor = [](const Value&, const Value&) { return Value(false); };
  auto report = verify_laws(sig, kTwo.carrier());
  CHECK_FALSE(report.passed());
  const auto* unit = report.find("unit");
  REQUIRE(unit != nullptr);
  CHECK_FALSE(unit->passed);
  CHECK_FALSE(unit->witness.empty());
}

TEST_CASE("exponentiability identity") {
  CHECK(check_exp_condition(kTwo, kTwo.carrier()));
  CHECK(check_exp_condition(kDiamond, kDiamond.carrier()));
  std::vector<Value> grid{rv(0), rv(1), rv(2), rv(3), inf()};
  CHECK(check_exp_condition(kPlus, grid));
  CHECK(check_exp_condition(kMax, grid));
}

TEST_CASE("reversed order and formatting") {
  CHECK(kPlus.leq(inf(), rv(0)));
  CHECK(kPlus.join(rv(2), rv(3)) == rv(2));
  CHECK(kPlus.meet(rv(2), rv(3)) == rv(3));
  CHECK(kPlus.tensor(rv(1, 2), rv(1, 3)) == rv(5, 6));
  CHECK(kMax.tensor(rv(1, 2), rv(1, 3)) == rv(1, 2));
  CHECK(kPlus.format(rv(3, 4)) == "3/4");
  CHECK(kPlus.format(inf()) == "inf");
  CHECK(kPlus.parse("6/8") == rv(3, 4));
  CHECK(kDiamond.parse(kDiamond.format(kU)) == Value(kU));
  CHECK(Quantale::from_name("plus") == kPlus);
  CHECK_THROWS_AS(kPlus.carrier(), InputError);
  CHECK_THROWS_AS(kTwo.parse("maybe"), InputError);
}
