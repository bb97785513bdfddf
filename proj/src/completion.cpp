#include "equilog/completion.hpp"

#include "equilog/base.hpp"
#include "equilog/errors.hpp"

#include <algorithm>
#include <map>

namespace equilog {

namespace {

using Candidates = std::vector<std::vector<std::size_t>>;

bool legs_valid(const PseudoEqRel& p) {
  return is_vfunctor(p.x1, p.x0, p.r1) && is_vfunctor(p.x1, p.x0, p.r2);
}

/// First V-functor dom → cod respecting the candidate lists, trying `preferred` first.
std::optional<Map> find_functor(const VCatObj& dom, const VCatObj& cod, const Candidates& candidates,
                                const std::optional<Map>& preferred, const std::string& what) {
  auto respects = [&](const Map& f) {
    if (f.size() != candidates.size()) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (std::find(candidates[i].begin(), candidates[i].end(), f[i]) == candidates[i].end()) {
        return false;
      }
    }
    return true;
  };
  if (preferred && respects(*preferred) && is_vfunctor(dom, cod, *preferred)) return preferred;
  double space = 1;
  for (const auto& c : candidates) space *= static_cast<double>(c.size());
  if (space > kWitnessSearchBound) {
    throw BoundExceeded(what + " witness search space " + std::to_string(static_cast<long long>(space)) +
                        " exceeds the bound");
  }
  std::optional<Map> found;
  Base d(dom), c(cod);
  for_each_base_morphism(d, c, candidates, [](const Map&, std::size_t) { return true; },
                         [&](const Map& f) {
                           found = f;
                           return false;
                         });
  return found;
}

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

/// Points (x, x') of x0 × x0 accepted by `keep`, with the structure induced by both projections.
PseudoEqRel relation_span(const VCatObj& x0, const std::function<bool(std::size_t, std::size_t)>& keep) {
  std::vector<std::string> names;
  Map first, second;
  for (std::size_t x = 0; x < x0.size(); ++x) {
    for (std::size_t y = 0; y < x0.size(); ++y) {
      if (!keep(x, y)) continue;
      names.push_back(pair_name(x0.carrier()[x], x0.carrier()[y]));
      first.push_back(x);
      second.push_back(y);
    }
  }
  std::vector<SourceLeg> legs{{std::cref(x0), first}, {std::cref(x0), second}};
  VCatObj x1 = initial_structure(x0.quantale(), std::move(names), legs);
  return PseudoEqRel{std::move(x1), x0, std::move(first), std::move(second), {}, {}, {}};
}

}  // namespace

SpanPullback span_pullback(const PseudoEqRel& p) {
  const auto n = p.x1.size();
  auto square = vcat_product(p.x1, p.x1);
  SpanPullback out;
  std::vector<std::size_t> points;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (p.r2[a] == p.r1[b]) {
        points.push_back(a * n + b);
        out.pairs.emplace_back(a, b);
        out.r3.push_back(a);
        out.r4.push_back(b);
      }
    }
  }
  out.object = vcat_subobject(square.object, points);
  return out;
}

bool is_regmono(const PseudoEqRel& p) {
  const auto& q = p.x0.quantale();
  for (std::size_t a = 0; a < p.x1.size(); ++a) {
    for (std::size_t b = 0; b < p.x1.size(); ++b) {
      if (a != b && p.r1[a] == p.r1[b] && p.r2[a] == p.r2[b]) return false;
      Value induced = q.meet(p.x0(p.r1[a], p.r1[b]), p.x0(p.r2[a], p.r2[b]));
      if (!(p.x1(a, b) == induced)) return false;
    }
  }
  return true;
}

PerVerdict verify_per(const PseudoEqRel& p) {
  PerVerdict v;
  const bool legs = p.r1.size() == p.x1.size() && p.r2.size() == p.x1.size() && legs_valid(p);
  v.report.add("legs", legs, legs ? "" : "r1 or r2 is not a V-functor x1 → x0");
  if (!legs) return v;

  Candidates refl(p.x0.size()), symm(p.x1.size());
  for (std::size_t a = 0; a < p.x1.size(); ++a) {
    if (p.r1[a] == p.r2[a]) refl[p.r1[a]].push_back(a);
    for (std::size_t b = 0; b < p.x1.size(); ++b) {
      if (p.r1[b] == p.r2[a] && p.r2[b] == p.r1[a]) symm[a].push_back(b);
    }
  }
  v.r = find_functor(p.x0, p.x1, refl, p.r, "reflexivity");
  v.report.add("reflexivity", v.r.has_value(), v.r ? "" : "no r with r1·r = id = r2·r");
  v.s = find_functor(p.x1, p.x1, symm, p.s, "symmetry");
  v.report.add("symmetry", v.s.has_value(), v.s ? "" : "no s with r1·s = r2 and r2·s = r1");

  auto pb = span_pullback(p);
  Candidates trans(pb.pairs.size());
  for (std::size_t k = 0; k < pb.pairs.size(); ++k) {
    auto [a, b] = pb.pairs[k];
    for (std::size_t c = 0; c < p.x1.size(); ++c) {
      if (p.r1[c] == p.r1[a] && p.r2[c] == p.r2[b]) trans[k].push_back(c);
    }
  }
  v.t = find_functor(pb.object, p.x1, trans, p.t, "transitivity");
  v.report.add("transitivity", v.t.has_value(), v.t ? "" : "no t with r1·t = r1·r3 and r2·t = r2·r4");

  v.regmono = is_regmono(p);
  v.report.add("regmono", v.regmono, v.regmono ? "" : "⟨r1,r2⟩ is not injective and initial");
  return v;
}

PseudoEqRel equ_per_roundtrip(const EquObj& e) {
  const auto* x0 = std::get_if<VCatObj>(&e.base);
  if (!x0) throw InputError("pseudo-equivalence relations are built over V-category bases");
  return relation_span(*x0, [&](std::size_t x, std::size_t y) { return e.equiv.related(x, y); });
}

EquObj per_to_equ(const PseudoEqRel& p) {
  if (!is_regmono(p)) throw InputError("span is not a regular mono into x0 × x0");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < p.x1.size(); ++a) pairs.emplace_back(p.r1[a], p.r2[a]);
  Per rel = Per::from_pairs(p.x0.size(), pairs);
  if (!rel.is_total()) throw InputError("span image is not reflexive");
  return make_equ(p.x0, std::move(rel));
}

PseudoEqRel kernel_pair(const VFunctor& f) {
  PseudoEqRel k = relation_span(f.dom, [&](std::size_t x, std::size_t y) { return f.map[x] == f.map[y]; });
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t a = 0; a < k.x1.size(); ++a) index[{k.r1[a], k.r2[a]}] = a;
  Map r(f.dom.size()), s(k.x1.size()), t;
  for (std::size_t x = 0; x < f.dom.size(); ++x) r[x] = index.at({x, x});
  for (std::size_t a = 0; a < k.x1.size(); ++a) s[a] = index.at({k.r2[a], k.r1[a]});
  for (auto [a, b] : span_pullback(k).pairs) t.push_back(index.at({k.r1[a], k.r2[b]}));
  k.r = r;
  k.s = s;
  k.t = t;
  return k;
}

KernelPairCertificate per_as_kernel_pair(const PseudoEqRel& p) {
  EquObj e = per_to_equ(p);
  Map projection(p.x0.size());
  for (std::size_t x = 0; x < p.x0.size(); ++x) projection[x] = static_cast<std::size_t>(e.equiv.label(x));
  VCatObj quotient = quotient_closure(p.x0, projection, e.equiv.block_count());
  KernelPairCertificate out{VFunctor{p.x0, quotient, projection}, {}, std::nullopt};
  out.kernel = kernel_pair(out.quotient);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t a = 0; a < out.kernel.x1.size(); ++a) {
    index[{out.kernel.r1[a], out.kernel.r2[a]}] = a;
  }
  if (index.size() != p.x1.size()) return out;
  Map phi(p.x1.size()), inverse(p.x1.size());
  for (std::size_t a = 0; a < p.x1.size(); ++a) {
    auto it = index.find({p.r1[a], p.r2[a]});
    if (it == index.end()) return out;
    phi[a] = it->second;
    inverse[it->second] = a;
  }
  if (is_vfunctor(p.x1, out.kernel.x1, phi) && is_vfunctor(out.kernel.x1, p.x1, inverse) &&
      compose(out.kernel.r1, phi) == p.r1 && compose(out.kernel.r2, phi) == p.r2) {
    out.iso = phi;
  }
  return out;
}

Reflection reflect_to_equ(const PseudoEqRel& p) {
  auto verdict = verify_per(p);
  if (!verdict.witnesses_found()) {
    throw InputError("reflection needs a verified pseudo-equivalence relation");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < p.x1.size(); ++a) pairs.emplace_back(p.r1[a], p.r2[a]);
  Map unit(p.x0.size());
  for (std::size_t x = 0; x < unit.size(); ++x) unit[x] = x;
  return Reflection{make_equ(p.x0, Per::from_pairs(p.x0.size(), pairs)), std::move(unit)};
}

PseudoEqRel span_product(const PseudoEqRel& p, const PseudoEqRel& q) {
  auto top = vcat_product(p.x1, q.x1);
  auto bottom = vcat_product(p.x0, q.x0);
  const auto m1 = q.x1.size(), m0 = q.x0.size();
  PseudoEqRel out{top.object, bottom.object, Map(top.object.size()), Map(top.object.size()), {}, {}, {}};
  for (std::size_t a = 0; a < p.x1.size(); ++a) {
    for (std::size_t b = 0; b < m1; ++b) {
      out.r1[a * m1 + b] = p.r1[a] * m0 + q.r1[b];
      out.r2[a * m1 + b] = p.r2[a] * m0 + q.r2[b];
    }
  }
  if (p.r && q.r) {
    Map r(bottom.object.size());
    for (std::size_t x = 0; x < p.x0.size(); ++x) {
      for (std::size_t y = 0; y < m0; ++y) r[x * m0 + y] = (*p.r)[x] * m1 + (*q.r)[y];
    }
    out.r = r;
  }
  if (p.s && q.s) {
    Map s(top.object.size());
    for (std::size_t a = 0; a < p.x1.size(); ++a) {
      for (std::size_t b = 0; b < m1; ++b) s[a * m1 + b] = (*p.s)[a] * m1 + (*q.s)[b];
    }
    out.s = s;
  }
  if (p.t && q.t) {
    auto index_of = [](const SpanPullback& pb) {
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
      for (std::size_t k = 0; k < pb.pairs.size(); ++k) index[pb.pairs[k]] = k;
      return index;
    };
    const auto p_index = index_of(span_pullback(p));
    const auto q_index = index_of(span_pullback(q));
    const auto pb = span_pullback(out);
    Map t(pb.pairs.size());
    for (std::size_t k = 0; k < pb.pairs.size(); ++k) {
      auto [u, w] = pb.pairs[k];
      auto pk = p_index.at({u / m1, w / m1});
      auto qk = q_index.at({u % m1, w % m1});
      t[k] = (*p.t)[pk] * m1 + (*q.t)[qk];
    }
    out.t = t;
  }
  return out;
}

std::vector<Map> span_morphism_classes(const PseudoEqRel& p, const PseudoEqRel& q) {
  std::vector<Map> admissible;
  for (const auto& f0 : enumerate_vfunctors(p.x0, q.x0)) {
    Candidates lift(p.x1.size());
    for (std::size_t a = 0; a < p.x1.size(); ++a) {
      for (std::size_t b = 0; b < q.x1.size(); ++b) {
        if (q.r1[b] == f0[p.r1[a]] && q.r2[b] == f0[p.r2[a]]) lift[a].push_back(b);
      }
    }
    if (find_functor(p.x1, q.x1, lift, std::nullopt, "span morphism")) admissible.push_back(f0);
  }
  auto related = [&](const Map& f0, const Map& g0) {
    Candidates homotopy(p.x0.size());
    for (std::size_t x = 0; x < p.x0.size(); ++x) {
      for (std::size_t b = 0; b < q.x1.size(); ++b) {
        if (q.r1[b] == f0[x] && q.r2[b] == g0[x]) homotopy[x].push_back(b);
      }
    }
    return find_functor(p.x0, q.x1, homotopy, std::nullopt, "homotopy").has_value();
  };
  std::vector<Map> reps;
  for (const auto& f0 : admissible) {
    bool known = std::any_of(reps.begin(), reps.end(), [&](const Map& r) { return related(r, f0); });
    if (!known) reps.push_back(f0);
  }
  return reps;
}

RegTriple triple_embed(const VCatObj& x) {
  auto yoneda = presheaf_embed(x);
  return RegTriple{std::move(yoneda.cod), x.carrier(), std::move(yoneda.map)};
}

std::optional<Map> triple_morphism_check(const Map& f, const RegTriple& from, const RegTriple& to) {
  if (f.size() != from.elements.size()) throw InputError("function size differs from element count");
  Candidates candidates(from.base.size());
  std::vector<bool> fixed(from.base.size(), false);
  for (std::size_t p = 0; p < from.base.size(); ++p) {
    for (std::size_t v = 0; v < to.base.size(); ++v) candidates[p].push_back(v);
  }
  for (std::size_t a = 0; a < f.size(); ++a) {
    auto target = to.sigma.at(f[a]);
    auto p = from.sigma[a];
    if (fixed[p] && candidates[p] != std::vector<std::size_t>{target}) return std::nullopt;
    candidates[p] = {target};
    fixed[p] = true;
  }
  std::optional<Map> found;
  Base d(from.base), c(to.base);
  for_each_base_morphism(d, c, candidates, [](const Map&, std::size_t) { return true; },
                         [&](const Map& g) {
                           found = g;
                           return false;
                         });
  return found;
}

VCatObj triple_initial_lifting(const RegTriple& t) {
  std::vector<SourceLeg> legs{{std::cref(t.base), t.sigma}};
  return initial_structure(t.base.quantale(), t.elements, legs);
}

std::optional<Map> find_triple_isomorphism(const RegTriple& a, const RegTriple& b) {
  if (a.elements.size() != b.elements.size()) return std::nullopt;
  for (const auto& p : permutations(a.elements.size())) {
    Map inverse(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inverse[p[i]] = i;
    if (triple_morphism_check(p, a, b) && triple_morphism_check(inverse, b, a)) return p;
  }
  return std::nullopt;
}

}  // namespace equilog
