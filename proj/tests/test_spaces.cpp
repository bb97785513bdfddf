#include "doctest.h"
#include "equilog/equ.hpp"
#include "equilog/spaces.hpp"
#include "equilog/universe.hpp"
#include "support.hpp"

using namespace equilog;
using namespace equilog::testing;

namespace {

const Quantale kPlus(QuantaleKind::PlusReversed);

/// Every subset of an n-point carrier as a list of opens.
FinTop discrete_space(std::size_t n) {
  std::vector<Subset> opens;
  for (Subset s = 0; s < (Subset{1} << n); ++s) opens.push_back(s);
  return FinTop(point_names(n), opens);
}

}  // namespace

TEST_CASE("space axioms") {
  CHECK(verify_space(discrete_space(3)).passed());
  FinTop missing(point_names(2), {0b01});
  CHECK_FALSE(verify_space(missing).passed());

  Rng rng(11);
  auto grid = kPlus.default_grid();
  for (int k = 0; k < 20; ++k) {
    auto d = random_structure(rng, kPlus, 3, grid);
    CHECK(verify_space(met_to_app(d)).passed());
  }
  auto table = met_to_app(ord_to_met(chain(2))).table();
  table[0] = ExtReal(0);  // δ(p0, ∅)
  auto r = verify_space(FinApp(point_names(2), table));
  CHECK_FALSE(r.find("empty-infinite")->passed);
  CHECK_FALSE(r.find("empty-infinite")->witness.empty());
}

TEST_CASE("order to metric") {
  auto d = ord_to_met(chain(2));
  CHECK(d(0, 1) == rv(0));
  CHECK(d(1, 0) == inf());
  CHECK(met_to_ord(d) == chain(2));

  auto e = adjunction_transfer(make_equ(chain(2), Per::discrete(2)), TransferPair::OrdMet,
                               Direction::Rightward);
  CHECK(std::get<VCatObj>(e.base) == d);
  CHECK(e.equiv == Per::discrete(2));
}

TEST_CASE("order to topology") {
  CHECK(ord_to_top(antichain(2)) == discrete_space(2));
  auto t = ord_to_top(chain(2));
  // down-sets of p0 < p1: ∅, {p0}, {p0,p1}
  CHECK(t.opens() == std::vector<Subset>{0b00, 0b01, 0b11});
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& s : enumerate_topologies(n)) {
      CHECK(verify_space(s).passed());
      CHECK(ord_to_top(top_to_ord(s)) == s);
    }
  }
}

TEST_CASE("metric and approach round trip") {
  auto grid = kPlus.default_grid();
  for (const auto& d : structures_up_to(kPlus, 2, grid, false)) CHECK(app_to_met(met_to_app(d)) == d);
  Rng rng(5);
  for (int k = 0; k < 30; ++k) {
    auto d = random_structure(rng, kPlus, 4, grid);
    CHECK(app_to_met(met_to_app(d)) == d);
  }
}

TEST_CASE("topology and approach") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& s : enumerate_topologies(n)) {
      auto a = top_to_app(s);
      CHECK(verify_space(a).passed());
      CHECK(app_to_top(a) == ord_to_top(top_to_ord(s)));
    }
  }
}

TEST_CASE("continuity and contraction") {
  auto s = ord_to_top(chain(2));
  CHECK(is_continuous(s, s, Map{0, 1}));
  CHECK(is_continuous(s, s, Map{0, 0}));
  CHECK_FALSE(is_continuous(s, s, Map{1, 0}));
  auto a = met_to_app(ord_to_met(chain(2)));
  CHECK(is_contraction(a, a, Map{1, 1}));
  CHECK_FALSE(is_contraction(a, a, Map{1, 0}));
}
