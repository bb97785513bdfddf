#include "doctest.h"
#include "equilog/oracle.hpp"
#include "equilog/pequ.hpp"
#include "equilog/universe.hpp"
#include "support.hpp"

using namespace equilog;
using namespace equilog::testing;

TEST_CASE("restriction to the domain") {
  auto c3 = chain(3);
  auto total = functor_R(make_pequ(c3, Per::discrete(3)));
  CHECK(base_size(total.base) == 3);
  CHECK(total.equiv.block_count() == 3);

  CHECK(base_size(functor_R(make_pequ(c3, Per::empty(3))).base) == 0);

  std::vector<std::size_t> inclusion;
  auto top_two = functor_R(make_pequ(c3, Per({-1, 0, 1})), &inclusion);
  CHECK(inclusion == std::vector<std::size_t>{1, 2});
  CHECK(std::get<VCatObj>(top_two.base) == vcat_subobject(c3, {1, 2}));
  CHECK(std::get<VCatObj>(top_two.base).below(0, 1));
}

TEST_CASE("hat construction") {
  Map embed;
  auto one = hat_pequ(make_equ(chain(1), Per::discrete(1)), &embed);
  CHECK(one.base.size() == 2);
  CHECK(one.per.domain() == std::vector<std::size_t>{embed[0]});
  for (std::size_t i = 0; i < 2; ++i) CHECK(one.base.below(i, embed[0]));

  auto two = hat_pequ(make_equ(chain(2), Per::discrete(2)), &embed);
  CHECK(two.base.size() == 3);
  auto domain = two.per.domain();
  CHECK(domain.size() == 2);
  CHECK(two.per.related(embed[0], embed[0]));
  CHECK(two.per.related(embed[1], embed[1]));
  CHECK_FALSE(two.per.related(embed[0], embed[1]));

  auto values = Quantale(QuantaleKind::Two).carrier();
  std::vector<VCatObj> separated;
  for (auto& b : structures_up_to(Quantale(QuantaleKind::Two), 3, values, true)) {
    if (is_separated(b)) separated.push_back(b);
  }
  for (const auto& e : equ_objects(separated, true)) CHECK(find_isomorphism(functor_R(hat_pequ(e)), e));
}

TEST_CASE("partial exponentials") {
  auto c2 = make_pequ(chain(2), Per::discrete(2));
  auto one = make_pequ(chain(1), Per::discrete(1));

  auto y1 = pequ_exponential(one, c2);
  CHECK(y1.object.base.size() == 2);
  CHECK(y1.object.per.block_count() == c2.per.block_count());

  auto to_one = pequ_exponential(c2, one);
  CHECK(to_one.object.base.size() == 1);
  CHECK(to_one.object.per.related(0, 0));

  auto e = pequ_exponential(c2, c2);
  CHECK(e.object.base.size() == 3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) CHECK(e.object.per.related(a, b) == (a == b));
  }
  auto values = Quantale(QuantaleKind::Two).carrier();
  auto competitors = pequ_objects(structures_up_to(Quantale(QuantaleKind::Two), 2, values, true), true);
  CHECK(verify_pequ_exponential(c2, c2, e, competitors).passed);
}

TEST_CASE("R is full and faithful on small injective bases") {
  auto bases = injective_bases(Quantale(QuantaleKind::Two), 2, 3, true);
  auto objects = pequ_objects(bases, true);
  for (const auto& p : objects) {
    for (const auto& q : objects) CHECK(verify_R_full_faithful(p, q).passed);
  }
}
