#include "equilog/assembly.hpp"

#include "equilog/base.hpp"
#include "equilog/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace equilog {

namespace {

std::string bracket(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "]";
}

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Every assembly with at most `max_elements` elements over each base with at most
/// `max_carrier` points.
std::vector<Assembly> competitor_assemblies(const Quantale& q, std::size_t max_elements,
                                            std::size_t max_carrier) {
  const auto values = q.is_finite() ? q.carrier() : q.default_grid();
  std::vector<Assembly> out;
  for (std::size_t w = 0; w <= max_carrier; ++w) {
    for (const auto& base : enumerate_structures(q, w, values)) {
      std::vector<std::vector<std::size_t>> subsets;
      for (std::size_t mask = 1; mask < (std::size_t{1} << w); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < w; ++i) {
          if ((mask >> i) & 1u) s.push_back(i);
        }
        subsets.push_back(std::move(s));
      }
      for (std::size_t n = 0; n <= max_elements; ++n) {
        if (n > 0 && subsets.empty()) break;
        std::vector<std::size_t> choice(n, 0);
        while (true) {
          std::vector<std::string> elements;
          std::vector<std::vector<std::size_t>> e;
          for (std::size_t i = 0; i < n; ++i) {
            elements.push_back("z" + std::to_string(i));
            e.push_back(subsets[choice[i]]);
          }
          out.push_back(Assembly{elements, base, e});
          std::size_t k = 0;
          while (k < n && ++choice[k] == subsets.size()) choice[k++] = 0;
          if (k == n) break;
        }
      }
    }
  }
  return out;
}

}  // namespace

Assembly make_assembly(std::vector<std::string> elements, VCatObj base,
                       std::vector<std::vector<std::size_t>> realizers) {
  if (realizers.size() != elements.size()) {
    throw InputError("assembly needs one realizer list per element");
  }
  std::set<std::string> seen;
  for (const auto& e : elements) {
    if (!seen.insert(e).second) throw InputError("duplicate assembly element '" + e + "'");
  }
  for (std::size_t a = 0; a < realizers.size(); ++a) {
    auto& r = realizers[a];
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    if (r.empty()) throw InputError("element '" + elements[a] + "' has no realizer");
    if (r.back() >= base.size()) {
      throw InputError("realizer of '" + elements[a] + "' lies outside the base carrier");
    }
  }
  return Assembly{std::move(elements), std::move(base), std::move(realizers)};
}

Report verify_assembly(const Assembly& a) {
  Report r = verify_vcat(a.base);
  auto& nonempty = r.open("nonempty-realizers");
  auto& inside = r.open("realizers-in-carrier");
  if (a.realizers.size() != a.elements.size()) {
    nonempty.passed = false;
    nonempty.witness = "realizer lists do not match elements";
    return r;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.realizers[i].empty() && nonempty.passed) {
      nonempty.passed = false;
      nonempty.witness = "E(" + a.elements[i] + ") is empty";
    }
    for (auto x : a.realizers[i]) {
      if (x >= a.base.size() && inside.passed) {
        inside.passed = false;
        inside.witness = "E(" + a.elements[i] + ") mentions point " + std::to_string(x);
      }
    }
  }
  return r;
}

bool is_modest(const Assembly& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!intersect(a.realizers[i], a.realizers[j]).empty()) return false;
    }
  }
  return true;
}

std::optional<Map> track_check(const Map& f, const Assembly& from, const Assembly& to) {
  if (!(from.base.quantale() == to.base.quantale())) {
    throw InputError("assemblies over different quantales");
  }
  if (f.size() != from.size()) throw InputError("function size differs from element count");
  std::vector<std::size_t> all(to.base.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> candidates(from.base.size(), all);
  for (std::size_t a = 0; a < from.size(); ++a) {
    if (f[a] >= to.size()) throw InputError("function leaves the target elements");
    for (auto x : from.realizers[a]) candidates[x] = intersect(candidates[x], to.realizers[f[a]]);
  }
  std::optional<Map> found;
  Base dom(from.base), cod(to.base);
  for_each_base_morphism(dom, cod, candidates, [](const Map&, std::size_t) { return true; },
                         [&](const Map& g) {
                           found = g;
                           return false;
                         });
  return found;
}

std::vector<Map> enumerate_assembly_morphisms(const Assembly& from, const Assembly& to) {
  std::vector<Map> out;
  search_maps(all_candidates(from.size(), to.size()), [](const Map&, std::size_t) { return true; },
              [&](const Map& f) {
                if (track_check(f, from, to)) out.push_back(f);
                return true;
              });
  return out;
}

Assembly assm_product(const Assembly& x, const Assembly& y) {
  auto cone = vcat_product(x.base, y.base);
  const auto m = y.base.size();
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> e;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      elements.push_back("(" + x.elements[i] + "," + y.elements[j] + ")");
      std::vector<std::size_t> r;
      for (auto p : x.realizers[i]) {
        for (auto q : y.realizers[j]) r.push_back(p * m + q);
      }
      e.push_back(std::move(r));
    }
  }
  return make_assembly(std::move(elements), std::move(cone.object), std::move(e));
}

AssmExponential assm_exponential(const Assembly& x, const Assembly& y, ExponentialOptions opts) {
  auto exp = vcat_exponential(x.base, y.base, opts);
  std::vector<Map> functions;
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> e;
  search_maps(all_candidates(x.size(), y.size()), [](const Map&, std::size_t) { return true; },
              [&](const Map& f) {
                std::vector<std::size_t> trackers;
                for (std::size_t alpha = 0; alpha < exp.points.size(); ++alpha) {
                  const auto& g = exp.points[alpha];
                  bool tracks = true;
                  for (std::size_t a = 0; a < x.size() && tracks; ++a) {
                    for (auto r : x.realizers[a]) {
                      if (!contains(y.realizers[f[a]], g[r])) {
                        tracks = false;
                        break;
                      }
                    }
                  }
                  if (tracks) trackers.push_back(alpha);
                }
                if (!trackers.empty()) {
                  std::vector<std::string> images;
                  for (auto b : f) images.push_back(y.elements[b]);
                  elements.push_back(bracket(images));
                  functions.push_back(f);
                  e.push_back(std::move(trackers));
                }
                return true;
              });
  Map evaluation;
  for (std::size_t c = 0; c < functions.size(); ++c) {
    for (std::size_t a = 0; a < x.size(); ++a) evaluation.push_back(functions[c][a]);
  }
  Assembly object = make_assembly(std::move(elements), exp.object, std::move(e));
  return AssmExponential{std::move(object), std::move(functions), std::move(exp), std::move(evaluation)};
}

ModestReflection modest_reflection(const Assembly& a) {
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!intersect(a.realizers[i], a.realizers[j]).empty()) overlaps.emplace_back(i, j);
    }
  }
  Per classes = Per::equivalence_closure(a.size(), overlaps);
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> e;
  for (const auto& block : classes.blocks()) {
    std::vector<std::string> names;
    std::vector<std::size_t> r;
    for (auto i : block) {
      names.push_back(a.elements[i]);
      r.insert(r.end(), a.realizers[i].begin(), a.realizers[i].end());
    }
    elements.push_back(block.size() == 1 ? names.front() : bracket(names));
    e.push_back(std::move(r));
  }
  Map unit(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) unit[i] = static_cast<std::size_t>(classes.label(i));
  return ModestReflection{make_assembly(std::move(elements), a.base, std::move(e)), std::move(unit)};
}

std::vector<RegularSubobject> regular_subobjects(const Assembly& a, std::size_t competitor_elements,
                                                 std::size_t competitor_carrier) {
  if (a.size() >= 20) throw BoundExceeded("subobject enumeration is limited to 19 elements");
  std::vector<std::vector<std::size_t>> full(2);
  for (std::size_t x = 0; x < a.base.size(); ++x) {
    full[0].push_back(x);
    full[1].push_back(x);
  }
  // codomain of the cofork: two elements, each realized by everything
  const Assembly target{{"0", "1"}, a.base, full};
  std::vector<Assembly> competitors;
  if (!a.base.carrier().empty()) {
    competitors = competitor_assemblies(a.base.quantale(), competitor_elements, competitor_carrier);
  }

  std::vector<RegularSubobject> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << a.size()); ++mask) {
    RegularSubobject sub;
    std::vector<std::string> elements;
    std::vector<std::vector<std::size_t>> e;
    Map chi(a.size()), one(a.size(), 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      chi[i] = (mask >> i) & 1u;
      if (chi[i]) {
        sub.subset.push_back(i);
        elements.push_back(a.elements[i]);
        e.push_back(a.realizers[i]);
      }
    }
    sub.object = Assembly{elements, a.base, e};
    sub.inclusion = sub.subset;

    if (!track_check(chi, a, target) || !track_check(one, a, target)) {
      sub.certificate = "regular mono certificate not found at bound: cofork is not tracked";
      out.push_back(std::move(sub));
      continue;
    }
    std::string failure;
    for (const auto& z : competitors) {
      std::set<Map> factored;
      for (const auto& k : enumerate_assembly_morphisms(z, sub.object)) {
        factored.insert(compose(sub.inclusion, k));
      }
      std::set<Map> equalizing;
      for (const auto& k : enumerate_assembly_morphisms(z, a)) {
        if (compose(chi, k) == compose(one, k)) equalizing.insert(k);
      }
      if (factored != equalizing) {
        failure = "competitor with " + std::to_string(z.size()) + " elements over " +
                  std::to_string(z.base.size()) + " points does not factor uniquely";
        break;
      }
    }
    if (failure.empty()) {
      sub.certified = true;
      sub.certificate = "equalizer of the characteristic map and the constant map into "
                        "{0,1} (everything realizes both), checked against " +
                        std::to_string(competitors.size()) + " competitors";
    } else {
      sub.certificate = "regular mono certificate not found at bound: " + failure;
    }
    out.push_back(std::move(sub));
  }
  return out;
}

PEquObj mdst_to_pequ(const Assembly& a) {
  if (!is_modest(a)) throw InputError("assembly is not a modest set");
  std::vector<int> labels(a.base.size(), -1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (auto x : a.realizers[i]) labels[x] = static_cast<int>(i);
  }
  return make_pequ(a.base, Per(std::move(labels)));
}

Assembly pequ_to_mdst(const PEquObj& p) {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> e;
  for (const auto& block : p.per.blocks()) {
    std::vector<std::string> names;
    for (auto x : block) names.push_back(p.base.carrier()[x]);
    elements.push_back(bracket(names));
    e.push_back(block);
  }
  return make_assembly(std::move(elements), p.base, std::move(e));
}

Map mdst_to_pequ_morphism(const Assembly& from, const Assembly& to, const Map& f) {
  auto g = track_check(f, from, to);
  if (!g) throw InputError("function is not tracked");
  return *g;
}

Map pequ_to_mdst_morphism(const PEquObj& from, const PEquObj& to, const Map& g) {
  if (!is_equivariant(from.per, to.per, g)) throw InputError("map is not equivariant");
  Map out;
  for (const auto& block : from.per.blocks()) {
    out.push_back(static_cast<std::size_t>(to.per.label(g[block.front()])));
  }
  return out;
}

std::optional<Map> find_assembly_isomorphism(const Assembly& a, const Assembly& b) {
  if (a.size() != b.size()) return std::nullopt;
  for (const auto& p : permutations(a.size())) {
    Map inverse(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inverse[p[i]] = i;
    if (track_check(p, a, b) && track_check(inverse, b, a)) return p;
  }
  return std::nullopt;
}

}  // namespace equilog
