#include "doctest.h"
#include "equilog/errors.hpp"
#include "equilog/oracle.hpp"
#include "equilog/universe.hpp"
#include "equilog/vcat.hpp"
#include "support.hpp"

using namespace equilog;
using namespace equilog::testing;

namespace {

const Quantale kTwo(QuantaleKind::Two);
const Quantale kPlus(QuantaleKind::PlusReversed);

Map identity_map(std::size_t n) {
  Map m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

/// Down-closed subsets of a preorder, counted directly.
std::size_t count_downsets(const VCatObj& x) {
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << x.size()); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (((mask >> j) & 1u) && x.below(i, j) && !((mask >> i) & 1u)) closed = false;
      }
    }
    if (closed) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("axiom reports") {
  CHECK(verify_vcat(chain(2)).passed());
  VCatObj broken(kTwo, point_names(2));
  broken.set(0, 0, false);
  auto r = verify_vcat(broken);
  CHECK_FALSE(r.find("reflexivity")->passed);

  VCatObj tri(kPlus, point_names(3));
  tri.set(0, 1, rv(1));
  tri.set(1, 2, rv(1));
  tri.set(0, 2, rv(5));
  auto t = verify_vcat(tri);
  CHECK_FALSE(t.find("transitivity")->passed);
  CHECK(t.find("transitivity")->witness.find("p0") != std::string::npos);
}

TEST_CASE("initial structures") {
  auto x = chain(3);
  std::vector<SourceLeg> along_id{{std::cref(x), identity_map(3)}};
  CHECK(initial_structure(kTwo, x.carrier(), along_id) == x);

  auto point = chain(1);
  std::vector<SourceLeg> constant{{std::cref(point), Map{0, 0}}};
  CHECK(initial_structure(kTwo, point_names(2), constant) == VCatObj::indiscrete(kTwo, point_names(2)));
  CHECK(initial_structure(kTwo, point_names(2), {}) == VCatObj::indiscrete(kTwo, point_names(2)));

  auto c2 = chain(2);
  Map first{0, 0, 1, 1}, second{0, 1, 0, 1};
  std::vector<SourceLeg> pair{{std::cref(c2), first}, {std::cref(c2), second}};
  auto product = initial_structure(kTwo, point_names(4), pair);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(product.below(i, j) == (first[i] <= first[j] && second[i] <= second[j]));
    }
  }
  std::vector<SourceLeg> again{{std::cref(product), identity_map(4)}};
  CHECK(initial_structure(kTwo, product.carrier(), again) == product);
}

TEST_CASE("quotient closure examples") {
  auto x = chain(3);
  CHECK(quotient_closure(x, identity_map(3), x.carrier()) == x);

  VCatObj cycle(kTwo, point_names(3));
  cycle.set(0, 1, true);
  cycle.set(1, 2, true);
  cycle.set(2, 0, true);
  CHECK(quotient_closure(cycle, identity_map(3), cycle.carrier()) ==
        VCatObj::indiscrete(kTwo, cycle.carrier()));
  CHECK(quotient_closure(cycle, identity_map(3), cycle.carrier()).entries() ==
        path_join_closure(cycle, identity_map(3), 3).entries());

  VCatObj edges(kPlus, point_names(3));
  edges.set(0, 1, rv(1));
  edges.set(1, 2, rv(2));
  auto closed = quotient_closure(edges, identity_map(3), edges.carrier());
  CHECK(closed(0, 2) == rv(3));
  CHECK(closed.entries() == path_join_closure(edges, identity_map(3), 3).entries());

  CHECK_THROWS_WITH_AS(quotient_closure(x, Map{0, 0, 0}, point_names(2)), "quotient map must be onto",
                       InputError);
}

TEST_CASE("quotient closure is the smallest structure making p a V-functor") {
  Rng rng(3);
  auto grid = kPlus.default_grid();
  for (int k = 0; k < 40; ++k) {
    auto x = random_structure(rng, kPlus, 3, grid);
    Map p{0, 0, 1};
    auto q = quotient_closure(x, p, point_names(2));
    CHECK(is_vfunctor(x, q, p));
    std::vector<Value> values = grid;
    for (const auto& v : q.entries()) values.push_back(v);
    for (const auto& other : structures(kPlus, 2, values, false)) {
      if (!is_vfunctor(x, other, p)) continue;
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) CHECK(kPlus.leq(q(i, j), other(i, j)));
      }
    }
  }
}

TEST_CASE("separated reflection") {
  auto anti = antichain(2);
  auto r = separated_reflection(anti);
  CHECK(r.cod.size() == 2);
  CHECK(is_separated(r.cod));

  auto twocycle = VCatObj::indiscrete(kTwo, point_names(2));
  CHECK(separated_reflection(twocycle).cod.size() == 1);

  VCatObj zero(kPlus, point_names(2));
  zero.set(0, 1, rv(0));
  zero.set(1, 0, rv(0));
  CHECK(separated_reflection(zero).cod.size() == 1);

  auto values = kTwo.carrier();
  for (const auto& x : structures_up_to(kTwo, 3, values, false)) {
    auto s = separated_reflection(x);
    CHECK(is_separated(s.cod));
    CHECK(is_vfunctor(x, s.cod, s.map));
  }
}

TEST_CASE("presheaf objects") {
  auto one = presheaf_embed(chain(1));
  CHECK(one.cod.size() == 2);
  CHECK(find_vcat_isomorphism(one.cod, chain(2)));
  for (std::size_t i = 0; i < 2; ++i) CHECK(one.cod.below(i, one.map[0]));

  auto c2 = presheaf_embed(chain(2));
  CHECK(find_vcat_isomorphism(c2.cod, chain(3)));

  auto a2 = presheaf_embed(antichain(2));
  CHECK(a2.cod.size() == 4);
  auto boolean = VCatObj::preorder(point_names(4), [](std::size_t i, std::size_t j) { return (i & j) == i; });
  CHECK(find_vcat_isomorphism(a2.cod, boolean));

  auto values = kTwo.carrier();
  for (const auto& x : structures_up_to(kTwo, 3, values, true)) {
    auto e = presheaf_embed(x);
    CHECK(e.cod.size() == count_downsets(x));
    CHECK(is_initial(x, e.cod, e.map));
  }
  CHECK_THROWS_AS(presheaf_embed(VCatObj(kPlus, point_names(1))), InputError);
}

TEST_CASE("exponentials") {
  auto y = chain(3);
  auto one = chain(1);
  auto y1 = vcat_exponential(one, y);
  CHECK(y1.object.size() == 3);
  CHECK(find_vcat_isomorphism(y1.object, y));
  CHECK(vcat_exponential(y, one).object.size() == 1);

  auto c2 = chain(2);
  auto e = vcat_exponential(c2, c2);
  std::size_t monotone = 0;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) monotone += a <= b;
  }
  CHECK(e.object.size() == monotone);
  CHECK(find_vcat_isomorphism(e.object, chain(3)));
  CHECK(is_vfunctor(vcat_product(e.object, c2).object, c2, e.evaluation.map));
}
