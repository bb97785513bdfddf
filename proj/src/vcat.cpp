#include "equilog/vcat.hpp"

#include "equilog/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace equilog {

namespace {

void require_unique(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw InputError("duplicate carrier element '" + n + "'");
  }
}

void require_same_quantale(const VCatObj& x, const VCatObj& y) {
  if (!(x.quantale() == y.quantale())) {
    throw InputError("objects over different quantales (" + x.quantale().name() + " vs " +
                     y.quantale().name() + ")");
  }
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "]";
}

}  // namespace

VCatObj::VCatObj(Quantale q, std::vector<std::string> carrier)
    : quantale_(q), carrier_(std::move(carrier)) {
  require_unique(carrier_);
  entries_.assign(size() * size(), quantale_.bottom());
  for (std::size_t i = 0; i < size(); ++i) entries_[i * size() + i] = quantale_.unit();
}

VCatObj::VCatObj(Quantale q, std::vector<std::string> carrier, std::vector<Value> entries)
    : quantale_(q), carrier_(std::move(carrier)), entries_(std::move(entries)) {
  require_unique(carrier_);
  if (entries_.size() != size() * size()) {
    throw InputError("structure matrix must be " + std::to_string(size()) + "x" +
                     std::to_string(size()));
  }
  for (const auto& v : entries_) {
    if (!quantale_.contains(v)) throw InputError("matrix entry outside quantale " + q.name());
  }
}

void VCatObj::set(std::size_t x, std::size_t y, Value v) {
  if (!quantale_.contains(v)) throw InputError("matrix entry outside quantale " + quantale_.name());
  entries_[x * size() + y] = std::move(v);
}

bool VCatObj::below(std::size_t x, std::size_t y) const {
  return quantale_.leq(quantale_.unit(), (*this)(x, y));
}

std::size_t VCatObj::index_of(const std::string& name) const {
  auto it = std::find(carrier_.begin(), carrier_.end(), name);
  if (it == carrier_.end()) throw InputError("unknown carrier element '" + name + "'");
  return static_cast<std::size_t>(it - carrier_.begin());
}

VCatObj VCatObj::discrete(Quantale q, std::vector<std::string> carrier) {
  return VCatObj(q, std::move(carrier));
}

VCatObj VCatObj::indiscrete(Quantale q, std::vector<std::string> carrier) {
  auto n = carrier.size();
  return VCatObj(q, std::move(carrier), std::vector<Value>(n * n, q.top()));
}

VCatObj VCatObj::preorder(std::vector<std::string> carrier,
                          const std::function<bool(std::size_t, std::size_t)>& le) {
  auto n = carrier.size();
  std::vector<Value> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = (i == j) || le(i, j);
  }
  return VCatObj(Quantale(QuantaleKind::Two), std::move(carrier), std::move(entries));
}

VCatObj VCatObj::chain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return preorder(std::move(names), [](std::size_t i, std::size_t j) { return i <= j; });
}

Report verify_vcat(const VCatObj& x) {
  const auto& q = x.quantale();
  const auto& names = x.carrier();
  Report report;
  auto& refl = report.open("reflexivity");
  auto& trans = report.open("transitivity");
  for (std::size_t i = 0; i < x.size() && refl.passed; ++i) {
    if (!q.leq(q.unit(), x(i, i))) {
      refl.passed = false;
      refl.witness = "a(" + names[i] + "," + names[i] + ")=" + q.format(x(i, i));
    }
  }
  for (std::size_t i = 0; i < x.size() && trans.passed; ++i) {
    for (std::size_t j = 0; j < x.size() && trans.passed; ++j) {
      for (std::size_t k = 0; k < x.size() && trans.passed; ++k) {
        if (!q.leq(q.tensor(x(i, j), x(j, k)), x(i, k))) {
          trans.passed = false;
          trans.witness = "(" + names[i] + "," + names[j] + "," + names[k] + ")";
        }
      }
    }
  }
  return report;
}

bool is_vfunctor(const VCatObj& dom, const VCatObj& cod, const Map& f) {
  if (f.size() != dom.size()) return false;
  const auto& q = cod.quantale();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (f[i] >= cod.size()) return false;
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (!q.leq(dom(i, j), cod(f[i], f[j]))) return false;
    }
  }
  return true;
}

bool is_initial(const VCatObj& dom, const VCatObj& cod, const Map& f) {
  if (f.size() != dom.size()) return false;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (!(dom(i, j) == cod(f[i], f[j]))) return false;
    }
  }
  return true;
}

VCatObj initial_structure(const Quantale& q, std::vector<std::string> carrier,
                          std::span<const SourceLeg> source) {
  const auto n = carrier.size();
  std::vector<Value> entries(n * n, q.top());
  for (const auto& leg : source) {
    const VCatObj& t = leg.target.get();
    if (!(t.quantale() == q)) throw InputError("initial source mixes quantales");
    if (leg.map.size() != n) throw InputError("initial source map has the wrong domain size");
    for (auto v : leg.map) {
      if (v >= t.size()) throw InputError("initial source map leaves its codomain");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        entries[i * n + j] = q.meet(entries[i * n + j], t(leg.map[i], leg.map[j]));
      }
    }
  }
  return VCatObj(q, std::move(carrier), std::move(entries));
}

VCatObj quotient_closure(const VCatObj& x, const Map& p, std::vector<std::string> names) {
  const auto& q = x.quantale();
  const auto m = names.size();
  if (p.size() != x.size()) throw InputError("quotient map has the wrong domain size");
  std::vector<bool> hit(m, false);
  for (auto y : p) {
    if (y >= m) throw InputError("quotient map leaves its codomain");
    hit[y] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw InputError("quotient map must be onto");
  }

  std::vector<Value> b(m * m, q.bottom());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      auto& cell = b[p[i] * m + p[j]];
      cell = q.join(cell, x(i, j));
    }
  }
  for (std::size_t y = 0; y < m; ++y) b[y * m + y] = q.join(b[y * m + y], q.unit());

  // b <- b ∨ b·b until nothing changes
  while (true) {
    std::vector<Value> next = b;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          next[i * m + k] = q.join(next[i * m + k], q.tensor(b[i * m + j], b[j * m + k]));
        }
      }
    }
    if (next == b) break;
    b = std::move(next);
  }
  return VCatObj(q, std::move(names), std::move(b));
}

VCatObj quotient_closure(const VCatObj& x, const Map& p, std::size_t target_size) {
  std::vector<std::vector<std::string>> fibres(target_size);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < target_size) fibres[p[i]].push_back(x.carrier()[i]);
  }
  std::vector<std::string> names;
  for (std::size_t y = 0; y < target_size; ++y) {
    names.push_back(fibres[y].size() == 1 ? fibres[y][0] : join_names(fibres[y]));
  }
  return quotient_closure(x, p, std::move(names));
}

bool is_separated(const VCatObj& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x.below(i, j) && x.below(j, i)) return false;
    }
  }
  return true;
}

VFunctor separated_reflection(const VCatObj& x) {
  Map p(x.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](std::size_t r) {
      return x.below(i, r) && x.below(r, i);
    });
    if (it == reps.end()) {
      p[i] = reps.size();
      reps.push_back(i);
    } else {
      p[i] = static_cast<std::size_t>(it - reps.begin());
    }
  }
  auto object = quotient_closure(x, p, reps.size());
  return VFunctor{x, std::move(object), std::move(p)};
}

VFunctor presheaf_embed(const VCatObj& x) {
  const auto& q = x.quantale();
  if (!q.is_finite()) {
    throw InputError("presheaf object infinite; enough-injectives restricted to finite quantales");
  }
  const auto values = q.carrier();
  const auto n = x.size();

  std::vector<std::vector<Value>> presheaves;
  search_maps(
      all_candidates(n, values.size()),
      [&](const Map& phi, std::size_t i) {
        // a(x', x) ⊗ φ(x) ≤ φ(x') for all pairs among the assigned points
        for (std::size_t j = 0; j <= i; ++j) {
          if (!q.leq(q.tensor(x(j, i), values[phi[i]]), values[phi[j]])) return false;
          if (!q.leq(q.tensor(x(i, j), values[phi[j]]), values[phi[i]])) return false;
        }
        return true;
      },
      [&](const Map& phi) {
        std::vector<Value> row;
        for (auto v : phi) row.push_back(values[v]);
        presheaves.push_back(std::move(row));
        return true;
      });

  std::vector<std::string> names;
  for (const auto& phi : presheaves) {
    std::string name = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (phi[i] == q.bottom()) continue;
      if (!first) name += ",";
      first = false;
      name += x.carrier()[i];
      if (q.kind() != QuantaleKind::Two) name += ":" + q.format(phi[i]);
    }
    names.push_back(name + "}");
  }

  const auto m = presheaves.size();
  std::vector<Value> entries(m * m, q.top());
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      Value v = q.top();
      for (std::size_t i = 0; i < n; ++i) v = q.meet(v, q.hom(presheaves[s][i], presheaves[t][i]));
      entries[s * m + t] = v;
    }
  }
  VCatObj hat(q, std::move(names), std::move(entries));

  Map yoneda(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Value> column;
    for (std::size_t j = 0; j < n; ++j) column.push_back(x(j, i));
    auto it = std::find(presheaves.begin(), presheaves.end(), column);
    yoneda[i] = static_cast<std::size_t>(it - presheaves.begin());
  }
  return VFunctor{x, std::move(hat), std::move(yoneda)};
}

ProductCone vcat_product(const VCatObj& x, const VCatObj& y) {
  require_same_quantale(x, y);
  std::vector<std::string> names;
  Map first, second;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      names.push_back("(" + x.carrier()[i] + "," + y.carrier()[j] + ")");
      first.push_back(i);
      second.push_back(j);
    }
  }
  std::vector<SourceLeg> legs{{std::cref(x), first}, {std::cref(y), second}};
  auto object = initial_structure(x.quantale(), std::move(names), legs);
  return ProductCone{std::move(object), std::move(first), std::move(second)};
}

CoproductCocone vcat_coproduct(const VCatObj& x, const VCatObj& y) {
  require_same_quantale(x, y);
  const auto& q = x.quantale();
  std::vector<std::string> names;
  for (const auto& n : x.carrier()) names.push_back("0:" + n);
  for (const auto& n : y.carrier()) names.push_back("1:" + n);
  VCatObj object(q, std::move(names));
  Map first(x.size()), second(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    first[i] = i;
    for (std::size_t j = 0; j < x.size(); ++j) object.set(i, j, x(i, j));
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    second[i] = x.size() + i;
    for (std::size_t j = 0; j < y.size(); ++j) object.set(x.size() + i, x.size() + j, y(i, j));
  }
  return CoproductCocone{std::move(object), std::move(first), std::move(second)};
}

VCatObj vcat_subobject(const VCatObj& x, const std::vector<std::size_t>& points) {
  std::vector<std::string> names;
  for (auto p : points) names.push_back(x.carrier().at(p));
  std::vector<SourceLeg> legs{{std::cref(x), points}};
  return initial_structure(x.quantale(), std::move(names), legs);
}

std::vector<Map> enumerate_vfunctors(const VCatObj& dom, const VCatObj& cod, std::size_t limit) {
  require_same_quantale(dom, cod);
  const auto& q = cod.quantale();
  std::vector<Map> out;
  search_maps(
      all_candidates(dom.size(), cod.size()),
      [&](const Map& f, std::size_t i) {
        for (std::size_t j = 0; j <= i; ++j) {
          if (!q.leq(dom(i, j), cod(f[i], f[j])) || !q.leq(dom(j, i), cod(f[j], f[i]))) {
            return false;
          }
        }
        return true;
      },
      [&](const Map& f) {
        if (out.size() == limit) {
          throw BoundExceeded("more than " + std::to_string(limit) + " V-functors " +
                              std::to_string(dom.size()) + " -> " + std::to_string(cod.size()));
        }
        out.push_back(f);
        return true;
      });
  return out;
}

std::vector<VCatObj> enumerate_structures(const Quantale& q, std::size_t n,
                                          std::span<const Value> values) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) cells.emplace_back(i, j);
    }
  }
  std::vector<VCatObj> out;
  search_maps(
      all_candidates(cells.size(), values.size()),
      [](const Map&, std::size_t) { return true; },
      [&](const Map& choice) {
        std::vector<Value> entries(n * n, q.unit());
        for (std::size_t c = 0; c < cells.size(); ++c) {
          entries[cells[c].first * n + cells[c].second] = values[choice[c]];
        }
        VCatObj candidate(q, names, std::move(entries));
        if (verify_vcat(candidate).passed()) out.push_back(std::move(candidate));
        return true;
      });
  return out;
}

std::string map_name(const VCatObj& cod, const Map& f) {
  std::vector<std::string> images;
  for (auto v : f) images.push_back(cod.carrier()[v]);
  return join_names(images);
}

Exponential vcat_exponential(const VCatObj& x, const VCatObj& y, ExponentialOptions opts) {
  require_same_quantale(x, y);
  const auto& q = x.quantale();
  if (!q.is_finite()) {
    throw InputError("exponentials are only built over the finite quantales (two, diamond)");
  }
  auto functors = enumerate_vfunctors(x, y, opts.max_functors);

  std::vector<std::string> names;
  for (const auto& f : functors) names.push_back(map_name(y, f));
  const auto m = functors.size();
  std::vector<Value> entries(m * m);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      Value v = q.top();
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
          v = q.meet(v, q.hom(x(i, j), y(functors[s][i], functors[t][j])));
        }
      }
      entries[s * m + t] = v;
    }
  }
  VCatObj object(q, std::move(names), std::move(entries));

  auto prod = vcat_product(object, x);
  Map ev(prod.object.size());
  for (std::size_t p = 0; p < ev.size(); ++p) ev[p] = functors[prod.first[p]][prod.second[p]];
  Exponential out{object, functors, VFunctor{prod.object, y, ev}};

  if (!is_vfunctor(prod.object, y, ev)) {
    throw ConstructionRejected("candidate exponential rejected: evaluation is not a V-functor");
  }
  if (opts.ump_competitor_carrier > 0) {
    if (auto failure = audit_exponential(x, y, out, opts.ump_competitor_carrier)) {
      throw ConstructionRejected("candidate exponential rejected: " + *failure);
    }
  }
  return out;
}

std::optional<std::string> audit_exponential(const VCatObj& x, const VCatObj& y,
                                             const Exponential& e,
                                             std::size_t competitor_carrier) {
  const auto& q = x.quantale();
  std::map<Map, std::size_t> index;
  for (std::size_t i = 0; i < e.points.size(); ++i) index.emplace(e.points[i], i);
  const auto values = q.carrier();

  for (std::size_t n = 0; n <= competitor_carrier; ++n) {
    for (const auto& z : enumerate_structures(q, n, values)) {
      auto zx = vcat_product(z, x);
      std::size_t transposes = 0;
      std::optional<std::string> failure;
      search_maps(
          all_candidates(zx.object.size(), y.size()),
          [&](const Map& h, std::size_t i) {
            for (std::size_t j = 0; j <= i; ++j) {
              if (!q.leq(zx.object(i, j), y(h[i], h[j])) ||
                  !q.leq(zx.object(j, i), y(h[j], h[i]))) {
                return false;
              }
            }
            return true;
          },
          [&](const Map& h) {
            Map curried(z.size());
            for (std::size_t zi = 0; zi < z.size(); ++zi) {
              Map row(x.size());
              for (std::size_t xi = 0; xi < x.size(); ++xi) row[xi] = h[zi * x.size() + xi];
              auto it = index.find(row);
              if (it == index.end()) {
                failure = "transpose of " + map_name(y, h) + " leaves the exponent";
                return false;
              }
              curried[zi] = it->second;
            }
            if (!is_vfunctor(z, e.object, curried)) {
              failure = "transpose of " + map_name(y, h) + " is not a V-functor";
              return false;
            }
            ++transposes;
            return true;
          });
      if (failure) return failure;
      auto into_exponent = enumerate_vfunctors(z, e.object);
      if (into_exponent.size() != transposes) {
        return "competitor on " + std::to_string(n) + " points has " +
               std::to_string(into_exponent.size()) + " maps into the exponent but " +
               std::to_string(transposes) + " maps from the product";
      }
    }
  }
  return std::nullopt;
}

}  // namespace equilog
