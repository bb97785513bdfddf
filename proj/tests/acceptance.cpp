// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include "equilog/assembly.hpp"
#include "equilog/completion.hpp"
#include "equilog/oracle.hpp"
#include "equilog/universe.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace equilog;
using namespace equilog::testing;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) {
      passed = false;
      detail = why;
    }
  }
};

const Quantale kTwo(QuantaleKind::Two);
const Quantale kDiamond(QuantaleKind::Diamond);
const Quantale kPlus(QuantaleKind::PlusReversed);
const Quantale kMax(QuantaleKind::MaxReversed);

std::string describe(const EquObj& e) {
  std::ostringstream s;
  s << base_category(e.base) << "[" << base_size(e.base) << "]";
  if (const auto* x = std::get_if<VCatObj>(&e.base)) {
    s << " a=";
    for (const auto& v : x->entries()) s << x->quantale().format(v) << ",";
  }
  s << " blocks=" << e.equiv.block_count();
  return s.str();
}

// 1 ------------------------------------------------------------------------------------

Outcome quantale_laws() {
  Outcome o;
  std::size_t laws = 0;
  for (const auto& q : {kTwo, kDiamond, kPlus, kMax}) {
    auto probe = q.default_grid();
    auto report = verify_quantale(q, probe);
    for (const auto& c : report.checks) {
      ++laws;
      if (!c.passed) o.fail(q.name() + " " + c.name + ": " + c.witness);
    }
    if (!check_exp_condition(q, probe)) o.fail(q.name() + ": exponentiability identity fails");
  }
  if (o.passed) o.detail = std::to_string(laws) + " law checks over four quantales, identity holds for all four";
  return o;
}

// 2 ------------------------------------------------------------------------------------

Outcome closure_equivalence() {
  Outcome o;
  std::size_t instances = 0;
  auto check = [&](const VCatObj& raw, const Map& p, std::size_t m) {
    ++instances;
    auto fast = quotient_closure(raw, p, point_names(m, "q"));
    auto slow = path_join_closure(raw, p, m);
    if (fast.entries() != slow.entries()) {
      std::ostringstream s;
      s << raw.quantale().name() << " instance on " << raw.size() << " points differs";
      o.fail(s.str());
    }
  };
  auto sweep = [&](const Quantale& q, std::size_t n, const std::vector<Value>& values, bool all_maps) {
    const std::size_t off = n * (n - 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < off; ++i) total *= values.size();
    std::vector<std::vector<Map>> maps(n + 1);
    for (std::size_t m = 1; m <= n; ++m) {
      if (all_maps) maps[m] = surjections(n, m);
    }
    Map id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    if (!all_maps) maps[n] = {id};
    for (std::size_t code = 0; code < total; ++code) {
      VCatObj raw(q, point_names(n));
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          raw.set(i, j, values[c % values.size()]);
          c /= values.size();
        }
      }
      for (std::size_t m = 1; m <= n; ++m) {
        for (const auto& p : maps[m]) check(raw, p, m);
      }
    }
  };
  auto two = kTwo.carrier();
  for (std::size_t n = 1; n <= 4; ++n) sweep(kTwo, n, two, true);
  std::vector<Value> small{rv(0), rv(1, 2), rv(1), rv(3), inf()};
  for (std::size_t n = 1; n <= 3; ++n) sweep(kPlus, n, small, true);
  std::vector<Value> tiny{rv(1), inf()};
  sweep(kPlus, 4, tiny, true);

  Rng rng(20260401);
  for (const auto& q : {kTwo, kPlus}) {
    auto values = q.default_grid();
    std::uniform_int_distribution<std::size_t> size(1, 4);
    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    for (int k = 0; k < 200; ++k) {
      auto n = size(rng);
      VCatObj raw(q, point_names(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) raw.set(i, j, values[pick(rng)]);
      }
      std::uniform_int_distribution<std::size_t> target(1, n);
      auto m = target(rng);
      Map p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = i < m ? i : std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
      std::shuffle(p.begin(), p.end(), rng);
      check(raw, p, m);
    }
  }
  if (o.passed) o.detail = std::to_string(instances) + " instances (exhaustive ≤ 4 points and 400 random)";
  return o;
}

// 3 ------------------------------------------------------------------------------------

Outcome limits_colimits() {
  Outcome o;
  std::size_t verified = 0;
  auto run = [&](LimitKind kind, std::vector<EquObj> objects, std::vector<MorphClass> arrows,
                 std::span<const EquObj> competitors) {
    auto cone = limit_colimit(kind, objects, arrows);
    auto v = verify_universal_property(kind, cone, objects, arrows, competitors);
    ++verified;
    if (!v.passed) {
      std::string in;
      for (const auto& x : objects) in += describe(x) + "; ";
      for (const auto& f : arrows) in += describe(f.dom) + " -> " + describe(f.cod) + "; ";
      o.fail(limit_kind_name(kind) + " of " + in + v.certificate);
    }
  };
  auto ord = ord_equ_universe(3, true);
  run(LimitKind::Terminal, {ord.front()}, {}, ord);
  run(LimitKind::Initial, {ord.front()}, {}, ord);
  for (const auto& x : ord) {
    for (const auto& y : ord) {
      run(LimitKind::Product, {x, y}, {}, ord);
      run(LimitKind::Coproduct, {x, y}, {}, ord);
      auto classes = enumerate_classes(x, y);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i; j < classes.size(); ++j) {
          std::vector<MorphClass> pair{{x, y, classes[i].rep}, {x, y, classes[j].rep}};
          run(LimitKind::Equalizer, {}, pair, ord);
          run(LimitKind::Coequalizer, {}, pair, ord);
        }
      }
      if (!o.passed) return o;
    }
  }
  const std::size_t ord_count = verified;

  Rng rng(7);
  auto grid = kPlus.default_grid();
  std::uniform_int_distribution<std::size_t> size(1, 3);
  for (int k = 0; k < 100; ++k) {
    auto xb = random_structure(rng, kPlus, size(rng), grid);
    auto yb = random_structure(rng, kPlus, size(rng), grid);
    EquObj x = make_equ(xb, random_partition(rng, xb.size()));
    EquObj y = make_equ(yb, random_partition(rng, yb.size()));
    auto values = occurring_values(Base(xb));
    auto more = occurring_values(Base(yb));
    values.insert(values.end(), more.begin(), more.end());
    auto competitors = competitor_universe(Base(xb), 2, values);
    auto classes = enumerate_classes(x, y);
    std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
    std::vector<MorphClass> pair{{x, y, classes[pick(rng)].rep}, {x, y, classes[pick(rng)].rep}};
    run(LimitKind::Product, {x, y}, {}, competitors);
    run(LimitKind::Coproduct, {x, y}, {}, competitors);
    run(LimitKind::Equalizer, {}, pair, competitors);
    run(LimitKind::Coequalizer, {}, pair, competitors);
    run(LimitKind::Terminal, {x}, {}, competitors);
    run(LimitKind::Initial, {x}, {}, competitors);
    if (!o.passed) return o;
  }
  o.detail = std::to_string(ord_count) + " Ord-Equ (co)limits against " + std::to_string(ord.size()) +
             " competitors (carrier ≤ 3, up to iso), " + std::to_string(verified - ord_count) +
             " from 100 random Met-Equ instances against competitors on ≤ 2 points";
  return o;
}

// 4 ------------------------------------------------------------------------------------

Outcome mono_epi() {
  Outcome o;
  auto ord = ord_equ_universe(3, true);
  std::size_t classes = 0;
  for (const auto& x : ord) {
    for (const auto& y : ord) {
      for (const auto& c : enumerate_classes(x, y)) {
        ++classes;
        MorphClass f{x, y, c.rep};
        auto fast = classify_mono_epi(f);
        auto slow = cancellation_mono_epi(f, ord);
        if (fast.mono != slow.mono || fast.epi != slow.epi) {
          o.fail("disagreement on " + describe(x) + " -> " + describe(y));
          return o;
        }
      }
    }
  }
  o.detail = std::to_string(classes) + " morphism classes between " + std::to_string(ord.size()) +
             " objects (carrier ≤ 3, up to iso)";
  return o;
}

// 5 ------------------------------------------------------------------------------------

Outcome functor_r() {
  Outcome o;
  std::size_t roundtrips = 0;
  auto values = kTwo.carrier();
  std::vector<VCatObj> separated;
  for (auto& b : structures_up_to(kTwo, 4, values, true)) {
    if (is_separated(b)) separated.push_back(std::move(b));
  }
  for (const auto& e : equ_objects(separated, true)) {
    ++roundtrips;
    auto back = functor_R(hat_pequ(e));
    if (!find_isomorphism(back, e)) {
      o.fail("R(hat(e)) is not isomorphic to e for " + describe(e));
      return o;
    }
  }
  auto bases = injective_bases(kTwo, 3, 3);
  auto objects = pequ_objects(bases, true);
  std::size_t pairs = 0;
  for (const auto& p : objects) {
    for (const auto& q : objects) {
      ++pairs;
      auto v = verify_R_full_faithful(p, q);
      if (!v.passed) {
        o.fail(v.certificate);
        return o;
      }
    }
  }
  o.detail = std::to_string(roundtrips) + " separated objects (carrier ≤ 4) round-trip; R bijective on " +
             std::to_string(pairs) + " pairs over " + std::to_string(bases.size()) +
             " injective bases (carrier ≤ 3, up to iso)";
  return o;
}

// 6 ------------------------------------------------------------------------------------

Outcome pequ_exponentials() {
  Outcome o;
  auto bases = injective_bases(kTwo, 3, 3);
  auto objects = pequ_objects(bases, true);
  auto values = kTwo.carrier();
  auto small = structures_up_to(kTwo, 2, values, true);
  auto competitors = pequ_objects(small, true);
  std::size_t pairs = 0;
  for (const auto& x : objects) {
    for (const auto& y : objects) {
      ++pairs;
      auto e = pequ_exponential(x, y);
      auto v = verify_pequ_exponential(x, y, e, competitors);
      if (!v.passed) {
        o.fail(v.certificate);
        return o;
      }
    }
  }
  auto c2 = chain(2);
  auto e = pequ_exponential(make_pequ(c2, Per::discrete(2)), make_pequ(c2, Per::discrete(2)));
  if (e.object.base.size() != 3) {
    o.fail("exponent of the 2-chain by itself has " + std::to_string(e.object.base.size()) + " points");
  }
  if (o.passed) {
    o.detail = std::to_string(pairs) + " pairs over " + std::to_string(bases.size()) +
               " injective bases (carrier ≤ 3, up to iso), " + std::to_string(competitors.size()) +
               " competitors on ≤ 2 points; 2-chain exponent has 3 points";
  }
  return o;
}

// 7 ------------------------------------------------------------------------------------

Outcome assemblies_modest() {
  Outcome o;
  auto bases = injective_bases(kTwo, 3, 3);
  std::size_t roundtrips = 0;
  for (const auto& a : assemblies(bases, 3, true)) {
    ++roundtrips;
    auto back = pequ_to_mdst(mdst_to_pequ(a));
    if (!find_assembly_isomorphism(back, a)) {
      o.fail("modest set does not round-trip");
      return o;
    }
  }
  for (const auto& p : pequ_objects(bases, true)) {
    ++roundtrips;
    auto back = mdst_to_pequ(pequ_to_mdst(p));
    if (!find_isomorphism(Base(back.base), back.per, Base(p.base), p.per)) {
      o.fail("partial equilogical object does not round-trip");
      return o;
    }
  }

  auto small_bases = injective_bases(kTwo, 2, 3);
  auto sweep = assemblies(small_bases, 2, false);
  auto values = kTwo.carrier();
  auto competitor_bases = structures_up_to(kTwo, 2, values, true);
  auto competitors = assemblies(competitor_bases, 2, false);
  std::vector<Assembly> modest_competitors;
  for (const auto& c : competitors) {
    if (is_modest(c)) modest_competitors.push_back(c);
  }
  std::size_t exponentials = 0;
  for (const auto& x : sweep) {
    for (const auto& y : sweep) {
      auto e = assm_exponential(x, y);
      ++exponentials;
      if (is_modest(y) && !is_modest(e.object)) {
        o.fail("exponential into a modest set is not modest");
        return o;
      }
      auto v = verify_assm_exponential(x, y, e, competitors);
      if (!v.passed) {
        o.fail("assembly exponential: " + v.certificate);
        return o;
      }
    }
  }
  auto wide = assemblies(bases, 2, false);
  for (const auto& x : wide) {
    for (const auto& y : wide) {
      if (!is_modest(y)) continue;
      ++exponentials;
      if (!is_modest(assm_exponential(x, y).object)) {
        o.fail("exponential into a modest set is not modest (carrier ≤ 3)");
        return o;
      }
    }
  }
  std::size_t reflections = 0;
  for (const auto& a : assemblies(bases, 3, false)) {
    ++reflections;
    auto v = verify_modest_reflection(a, modest_reflection(a), modest_competitors);
    if (!v.passed) {
      o.fail("modest reflection: " + v.certificate);
      return o;
    }
  }
  std::size_t subobject_sets = 0;
  for (const auto& a : assemblies(small_bases, 4, false)) {
    auto subs = regular_subobjects(a);
    ++subobject_sets;
    if (subs.size() != (std::size_t{1} << a.size())) {
      o.fail("assembly with " + std::to_string(a.size()) + " elements has " +
             std::to_string(subs.size()) + " regular subobjects");
      return o;
    }
    for (const auto& s : subs) {
      if (!s.certified) {
        o.fail(s.certificate);
        return o;
      }
    }
  }
  o.detail = std::to_string(roundtrips) + " round-trips, " + std::to_string(exponentials) +
             " exponentials, " + std::to_string(reflections) + " reflections, " +
             std::to_string(subobject_sets) + " assemblies with 2^|A| certified regular subobjects";
  return o;
}

// 8 ------------------------------------------------------------------------------------

/// Every span of V-functors x1 → x0 over Two with both carriers ≤ max_n that admits
/// reflexivity, symmetry and transitivity witnesses.
std::vector<PseudoEqRel> pseudo_equivalences(std::size_t max_n, std::size_t max_x1) {
  auto values = kTwo.carrier();
  auto x0s = structures_up_to(kTwo, max_n, values, true);
  auto x1s = structures_up_to(kTwo, max_x1, values, false);
  std::vector<PseudoEqRel> out;
  std::set<std::string> seen;
  for (const auto& x0 : x0s) {
    for (const auto& x1 : x1s) {
      auto legs = enumerate_vfunctors(x1, x0);
      for (std::size_t i = 0; i < legs.size(); ++i) {
        for (const auto& r2 : legs) {
          PseudoEqRel p{x1, x0, legs[i], r2, {}, {}, {}};
          auto v = verify_per(p);
          if (!v.witnesses_found()) continue;
          p.r = v.r;
          p.s = v.s;
          p.t = v.t;
          out.push_back(std::move(p));
        }
      }
    }
  }
  return out;
}

/// Spans carried by a relation on x0 with the initial structure along both projections.
std::vector<PseudoEqRel> relation_spans(std::size_t max_n) {
  auto values = kTwo.carrier();
  std::vector<PseudoEqRel> out;
  for (const auto& x0 : structures_up_to(kTwo, max_n, values, true)) {
    const auto n = x0.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n * n)); ++mask) {
      Map r1, r2;
      std::vector<std::string> names;
      for (std::size_t k = 0; k < n * n; ++k) {
        if ((mask >> k) & 1u) {
          r1.push_back(k / n);
          r2.push_back(k % n);
          names.push_back(x0.carrier()[k / n] + "~" + x0.carrier()[k % n]);
        }
      }
      std::vector<SourceLeg> legs{{std::cref(x0), r1}, {std::cref(x0), r2}};
      auto x1 = initial_structure(kTwo, names, legs);
      PseudoEqRel p{x1, x0, r1, r2, {}, {}, {}};
      if (verify_per(p).witnesses_found()) out.push_back(std::move(p));
    }
  }
  return out;
}

/// Bijection of the x1 carriers commuting with both legs, V-functorial both ways.
bool spans_isomorphic(const PseudoEqRel& a, const PseudoEqRel& b) {
  if (a.x0 != b.x0 || a.x1.size() != b.x1.size()) return false;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < b.x1.size(); ++k) index[{b.r1[k], b.r2[k]}] = k;
  if (index.size() != b.x1.size()) return false;
  Map phi(a.x1.size()), inverse(a.x1.size());
  for (std::size_t k = 0; k < a.x1.size(); ++k) {
    auto it = index.find({a.r1[k], a.r2[k]});
    if (it == index.end()) return false;
    phi[k] = it->second;
    inverse[it->second] = k;
  }
  return is_vfunctor(a.x1, b.x1, phi) && is_vfunctor(b.x1, a.x1, inverse);
}

Outcome completion() {
  Outcome o;
  std::size_t lemma = 0;
  for (const auto& e : ord_equ_universe(3, true)) {
    ++lemma;
    if (!find_isomorphism(per_to_equ(equ_per_roundtrip(e)), e)) {
      o.fail("per_to_equ ∘ equ_per_roundtrip is not the identity up to iso on " + describe(e));
      return o;
    }
  }
  auto regular = relation_spans(3);
  for (const auto& p : regular) {
    ++lemma;
    if (!is_regmono(p)) {
      o.fail("a relation span with initial structure is not a regular mono");
      return o;
    }
    if (!spans_isomorphic(equ_per_roundtrip(per_to_equ(p)), p)) {
      o.fail("equ_per_roundtrip ∘ per_to_equ is not the identity up to iso");
      return o;
    }
    if (!per_as_kernel_pair(p).iso) {
      o.fail("a regular-mono span is not the kernel pair of its quotient");
      return o;
    }
  }

  auto spans = pseudo_equivalences(3, 3);
  std::vector<const PseudoEqRel*> targets;
  for (const auto& t : regular) {
    if (t.x0.size() <= 2) targets.push_back(&t);
  }
  std::size_t reflectivity = 0;
  for (const auto& p : spans) {
    for (const auto* t : targets) {
      ++reflectivity;
      auto v = verify_reflectivity(p, *t);
      if (!v.passed) {
        o.fail("reflectivity: " + v.certificate);
        return o;
      }
    }
  }
  std::size_t products = 0;
  for (const auto& p : spans) {
    auto rp = reflect_to_equ(p);
    for (const auto& q : spans) {
      ++products;
      auto direct = reflect_to_equ(span_product(p, q)).object;
      auto composite = equ_product(rp.object, reflect_to_equ(q).object).object;
      if (!(direct == composite)) {
        o.fail("reflection does not preserve a binary product");
        return o;
      }
    }
  }

  std::size_t triples = 0;
  auto values = kTwo.carrier();
  auto objects = structures_up_to(kTwo, 3, values, true);
  for (const auto& x : objects) {
    auto gx = triple_embed(x);
    for (const auto& y : objects) {
      auto gy = triple_embed(y);
      ++triples;
      std::size_t count = 0;
      search_maps(all_candidates(x.size(), y.size()), [](const Map&, std::size_t) { return true; },
                  [&](const Map& f) {
                    if (triple_morphism_check(f, gx, gy)) ++count;
                    return true;
                  });
      if (count != enumerate_vfunctors(x, y).size()) {
        o.fail("triple hom-count differs from the V-functor count");
        return o;
      }
    }
  }
  o.detail = std::to_string(lemma) + " span and relation round-trips, " + std::to_string(reflectivity) +
             " reflectivity checks over " + std::to_string(spans.size()) + " spans, " +
             std::to_string(products) + " product pairs, " + std::to_string(triples) +
             " triple hom-counts (carrier ≤ 3)";
  return o;
}

// 9 ------------------------------------------------------------------------------------

std::vector<EquObj> random_equ(Rng& rng, const std::string& category, std::size_t count) {
  auto grid = kPlus.default_grid();
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::vector<EquObj> out;
  for (std::size_t k = 0; k < count; ++k) {
    auto n = size(rng);
    auto p = random_partition(rng, n);
    if (category == "plus") out.push_back(make_equ(random_structure(rng, kPlus, n, grid), p));
    if (category == "top") out.push_back(make_equ(random_topology(rng, n), p));
    if (category == "app") out.push_back(make_equ(random_approach(rng, n, grid), p));
  }
  return out;
}

Outcome adjunctions() {
  Outcome o;
  auto ord = ord_equ_universe(3, true);
  auto met_grid = kPlus.default_grid();
  auto met = equ_objects(structures_up_to(kPlus, 3, met_grid, true), true);
  std::vector<FinTop> tops;
  for (std::size_t n = 0; n <= 3; ++n) {
    auto part = enumerate_topologies(n);
    tops.insert(tops.end(), part.begin(), part.end());
  }
  auto top = equ_objects(tops);

  auto check = [&](TransferPair pair, std::span<const EquObj> c, std::span<const EquObj> d) {
    auto v = verify_adjunction(pair, c, d);
    if (!v.passed) o.fail(transfer_pair_name(pair) + ": " + v.certificate);
    return v.instances;
  };
  std::size_t pairs = 0;
  pairs += check(TransferPair::OrdMet, met, ord);
  pairs += check(TransferPair::OrdTop, ord, top);
  Rng rng(99);
  auto met_random = random_equ(rng, "plus", 50);
  auto app_random = random_equ(rng, "app", 50);
  auto top_random = random_equ(rng, "top", 50);
  pairs += check(TransferPair::MetApp, met_random, app_random);
  pairs += check(TransferPair::TopApp, app_random, top_random);
  if (!o.passed) return o;

  auto flipped = verify_adjunction(TransferPair::OrdMet, met, ord, true);
  if (flipped.passed) o.fail("the flipped Ord/Met pair passes");

  std::size_t roundtrips = 0;
  auto grid = kPlus.default_grid();
  for (const auto& d : structures_up_to(kPlus, 3, grid, false)) {
    ++roundtrips;
    if (app_to_met(met_to_app(d)) != d) o.fail("d_δ ≠ d for a metric on " + std::to_string(d.size()) + " points");
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      ++roundtrips;
      if (ord_to_top(top_to_ord(t)) != t) o.fail("a finite topology is not Alexandroff of its specialization");
    }
    auto values = kTwo.carrier();
    for (const auto& p : structures(kTwo, n, values, false)) {
      ++roundtrips;
      if (top_to_ord(ord_to_top(p)) != p) o.fail("specialization of the Alexandroff topology differs");
    }
  }
  if (o.passed) {
    o.detail = std::to_string(pairs) + " hom-set comparisons (Ord/Met and Ord/Top exhaustive at ≤ 3 " +
               "points, Met/App and Top/App on 50 random objects each side at ≤ 4 points), flipped " +
               "pair rejected, " + std::to_string(roundtrips) + " round-trips";
  }
  return o;
}

// 10 -----------------------------------------------------------------------------------

Outcome conditions() {
  Outcome o;
  SweepConfig sweep;
  sweep.max_carrier = 3;
  std::string summary;
  for (const auto& r : condition_suite(kTwo, sweep)) {
    summary += r.name.substr(0, 3) + " " + status_name(r.status) + "; ";
    if (r.status != Status::Pass) o.fail(r.name + " " + status_name(r.status) + ": " + r.detail);
  }
  if (o.passed) o.detail = summary + "at carrier ≤ 3";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "quantale laws", quantale_laws},
      {2, "closure equals path join", closure_equivalence},
      {3, "limits and colimits", limits_colimits},
      {4, "mono/epi characterizations", mono_epi},
      {5, "functor R", functor_r},
      {6, "partial exponentials", pequ_exponentials},
      {7, "assemblies and modest sets", assemblies_modest},
      {8, "exact and regular completion", completion},
      {9, "transfer adjunctions", adjunctions},
      {10, "condition suite", conditions},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) ++failures;
    std::printf("%s AC%-2d %s: %s [%.1f s]\n", o.passed ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
