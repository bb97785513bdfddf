#include "doctest.h"
#include "equilog/equ.hpp"
#include "equilog/errors.hpp"
#include "equilog/oracle.hpp"
#include "equilog/universe.hpp"
#include "support.hpp"

#include <set>

using namespace equilog;
using namespace equilog::testing;

namespace {

EquObj discrete_equ(const VCatObj& x) { return make_equ(x, Per::discrete(x.size())); }

/// The displayed class relation, evaluated directly.
bool related_maps(const EquObj& x, const EquObj& y, const Map& f, const Map& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (x.equiv.related(i, j) && !y.equiv.related(f[i], g[j])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("morphisms and class equality") {
  auto x = discrete_equ(chain(2));
  auto id = identity(x);
  CHECK(verify_equ_morphism(id).passed());
  CHECK(morph_equal(id, id));

  auto y = make_equ(chain(2), Per::full(2));
  MorphClass f{x, y, Map{0, 1}}, g{x, y, Map{0, 0}};
  CHECK(morph_equal(f, g) == related_maps(x, y, f.rep, g.rep));
  CHECK(morph_equal(f, g));

  auto merged = make_equ(antichain(2), Per::full(2));
  MorphClass split{merged, discrete_equ(antichain(2)), Map{0, 1}};
  auto r = verify_equ_morphism(split);
  CHECK(r.find("base-morphism")->passed);
  CHECK_FALSE(r.find("equivariance")->passed);

  MorphClass other{x, discrete_equ(chain(3)), Map{0, 1}};
  CHECK_THROWS_AS(morph_equal(f, other), InputError);
}

TEST_CASE("class equality is an equivalence on equivariant maps") {
  auto universe = ord_equ_universe(2, true);
  for (const auto& x : universe) {
    for (const auto& y : universe) {
      std::vector<MorphClass> maps;
      for_each_base_morphism(x.base, y.base, [](const Map&, std::size_t) { return true; }, [&](const Map& f) {
        if (is_equivariant(x.equiv, y.equiv, f)) maps.push_back({x, y, f});
        return true;
      });
      for (const auto& f : maps) {
        CHECK(morph_equal(f, f));
        for (const auto& g : maps) {
          CHECK(morph_equal(f, g) == morph_equal(g, f));
          for (const auto& h : maps) {
            if (morph_equal(f, g) && morph_equal(g, h)) CHECK(morph_equal(f, h));
          }
        }
      }
      std::set<ClassKey> keys;
      for (const auto& f : maps) keys.insert(class_key(x.equiv, y.equiv, f.rep));
      CHECK(keys.size() == enumerate_classes(x, y).size());
    }
  }
}

TEST_CASE("composition respects classes") {
  auto universe = ord_equ_universe(2, true);
  for (const auto& x : universe) {
    for (const auto& y : universe) {
      for (const auto& z : universe) {
        std::vector<Map> fs, gs;
        for_each_base_morphism(x.base, y.base, [](const Map&, std::size_t) { return true; }, [&](const Map& f) {
          if (is_equivariant(x.equiv, y.equiv, f)) fs.push_back(f);
          return true;
        });
        for_each_base_morphism(y.base, z.base, [](const Map&, std::size_t) { return true; }, [&](const Map& g) {
          if (is_equivariant(y.equiv, z.equiv, g)) gs.push_back(g);
          return true;
        });
        for (const auto& f : fs) {
          for (const auto& f2 : fs) {
            if (!same_class(x.equiv, y.equiv, f, f2)) continue;
            for (const auto& g : gs) {
              for (const auto& g2 : gs) {
                if (!same_class(y.equiv, z.equiv, g, g2)) continue;
                CHECK(same_class(x.equiv, z.equiv, compose(g, f), compose(g2, f2)));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("mono and epi examples") {
  auto two = discrete_equ(antichain(2));
  auto id = classify_mono_epi(identity(two));
  CHECK(id.mono);
  CHECK(id.epi);

  auto point = discrete_equ(chain(1));
  auto universe = ord_equ_universe(3, true);
  MorphClass inclusion{point, two, Map{0}};
  auto inc = classify_mono_epi(inclusion);
  CHECK(inc.mono);
  CHECK_FALSE(inc.epi);
  auto brute = cancellation_mono_epi(inclusion, universe);
  CHECK(brute.mono == inc.mono);
  CHECK(brute.epi == inc.epi);

  MorphClass collapse{two, point, Map{0, 0}};
  auto col = classify_mono_epi(collapse);
  CHECK_FALSE(col.mono);
  CHECK(col.epi);
  auto brute2 = cancellation_mono_epi(collapse, universe);
  CHECK(brute2.mono == col.mono);
  CHECK(brute2.epi == col.epi);
}

TEST_CASE("limit examples") {
  auto c2 = discrete_equ(chain(2));
  auto terminal = equ_terminal(c2.base).object;
  auto p = equ_product(c2, terminal);
  CHECK(find_isomorphism(p.object, c2));

  auto sq = equ_product(c2, c2);
  CHECK(base_size(sq.object.base) == 4);
  CHECK(sq.object.equiv.block_count() == 4);

  auto y = make_equ(chain(2), Per::full(2));
  auto eq = equ_equalizer(c2, y, Map{0, 1}, Map{1, 1});
  CHECK(base_size(eq.object.base) == 2);

  auto point = discrete_equ(chain(1));
  auto two = discrete_equ(antichain(2));
  auto coeq = equ_coequalizer(point, two, Map{0}, Map{1});
  CHECK(coeq.object.equiv.block_count() == 1);
  CHECK(base_size(coeq.object.base) == 2);

  auto universe = ord_equ_universe(3, true);
  std::vector<MorphClass> pair{{point, two, Map{0}}, {point, two, Map{1}}};
  auto cone = limit_colimit(LimitKind::Coequalizer, {}, pair);
  CHECK(verify_universal_property(LimitKind::Coequalizer, cone, {}, pair, universe).passed);

  std::vector<EquObj> ones{terminal, terminal};
  auto tt = limit_colimit(LimitKind::Product, ones, {});
  CHECK(verify_universal_property(LimitKind::Product, tt, ones, {}, universe).passed);
}

TEST_CASE("a wrong product candidate is rejected") {
  auto c2 = discrete_equ(chain(2));
  std::vector<EquObj> inputs{c2, c2};
  auto cone = equ_product(c2, c2);
  cone.object.equiv = Per::full(4);
  auto v = verify_universal_property(LimitKind::Product, cone, inputs, {}, ord_equ_universe(2, true));
  CHECK_FALSE(v.passed);
  CHECK_FALSE(v.certificate.empty());
}

TEST_CASE("limits over spaces") {
  auto top = make_equ(ord_to_top(chain(2)), Per::discrete(2));
  auto competitors = competitor_universe(top.base, 3);
  std::vector<EquObj> inputs{top, top};
  for (auto kind : {LimitKind::Product, LimitKind::Coproduct}) {
    auto cone = limit_colimit(kind, inputs, {});
    CHECK(verify_universal_property(kind, cone, inputs, {}, competitors).passed);
  }
  auto app = make_equ(met_to_app(ord_to_met(chain(2))), Per::full(2));
  std::vector<EquObj> apps{app, app};
  auto app_competitors = competitor_universe(app.base, 2);
  for (auto kind : {LimitKind::Product, LimitKind::Coproduct}) {
    auto cone = limit_colimit(kind, apps, {});
    CHECK(verify_universal_property(kind, cone, apps, {}, app_competitors).passed);
  }
}
