#include "doctest.h"
#include "equilog/errors.hpp"
#include "equilog/oracle.hpp"
#include "equilog/universe.hpp"
#include "support.hpp"

#include <cstdlib>

using namespace equilog;
using namespace equilog::testing;

namespace {

const Quantale kTwo(QuantaleKind::Two);

EquObj discrete_equ(const VCatObj& x) { return make_equ(x, Per::discrete(x.size())); }

}  // namespace

TEST_CASE("hom-class enumeration") {
  auto c2 = discrete_equ(chain(2));
  CHECK(enumerate_morphclasses(c2, c2).size() == 3);
  auto point = discrete_equ(chain(1));
  for (const auto& y : ord_equ_universe(3, true)) {
    CHECK(enumerate_morphclasses(y, point).size() == 1);
    CHECK(enumerate_morphclasses(point, y).size() == y.equiv.block_count());
  }
}

TEST_CASE("terminal times terminal") {
  auto t = equ_terminal(Base(chain(1))).object;
  std::vector<EquObj> inputs{t, t};
  auto cone = equ_product(t, t);
  CHECK(verify_universal_property(LimitKind::Product, cone, inputs, {}, ord_equ_universe(3, true)).passed);
}

TEST_CASE("adjunction verdicts") {
  auto ord = ord_equ_universe(2, true);
  auto values = Quantale(QuantaleKind::PlusReversed).default_grid();
  auto met = equ_objects(structures_up_to(Quantale(QuantaleKind::PlusReversed), 2, values, true), true);
  std::vector<FinTop> tops;
  for (std::size_t n = 0; n <= 2; ++n) {
    auto part = enumerate_topologies(n);
    tops.insert(tops.end(), part.begin(), part.end());
  }
  auto top = equ_objects(tops);
  CHECK(verify_adjunction(TransferPair::OrdMet, met, ord).passed);
  CHECK(verify_adjunction(TransferPair::OrdTop, ord, top).passed);
  auto flipped = verify_adjunction(TransferPair::OrdMet, met, ord, true);
  CHECK_FALSE(flipped.passed);
  CHECK_FALSE(flipped.certificate.empty());
}

TEST_CASE("injectivity") {
  SweepConfig sweep;
  sweep.max_carrier = 3;
  CHECK(injectivity_test(chain(2), sweep).passed);
  auto anti = injectivity_test(antichain(2), sweep);
  CHECK_FALSE(anti.passed);
  CHECK_FALSE(anti.certificate.empty());
  auto values = kTwo.carrier();
  for (const auto& x : structures_up_to(kTwo, 2, values, true)) {
    CHECK(injectivity_test(presheaf_embed(x).cod, sweep).passed);
  }
}

TEST_CASE("condition suite over orders") {
  SweepConfig sweep;
  sweep.max_carrier = 3;
  auto results = condition_suite(kTwo, sweep);
  CHECK(results.size() == 6);
  for (const auto& r : results) CHECK_MESSAGE(r.status == Status::Pass, r.name << ": " << r.detail);
}

TEST_CASE("condition suite over the other quantales") {
  SweepConfig sweep;
  sweep.max_carrier = 2;
  for (auto kind : {QuantaleKind::Diamond, QuantaleKind::PlusReversed, QuantaleKind::MaxReversed}) {
    for (const auto& r : condition_suite(Quantale(kind), sweep)) {
      CHECK_MESSAGE(r.status != Status::Fail, r.name << ": " << r.detail);
    }
  }
}

TEST_CASE("separation and products") {
  auto values = kTwo.carrier();
  auto all = structures_up_to(kTwo, 3, values, true);
  for (const auto& x : all) {
    for (const auto& y : all) CHECK(separation_preserves_product(x, y));
  }
}

TEST_CASE("sweep configuration") {
  setenv("EQUILOG_MAX_CARRIER", "2", 1);
  CHECK(SweepConfig::from_env().max_carrier == 2);
  unsetenv("EQUILOG_MAX_CARRIER");
  CHECK(SweepConfig::from_env().max_carrier == 3);
  Deadline expired(std::chrono::seconds(0));
  CHECK_THROWS_AS(expired.check(), BoundExceeded);
}
