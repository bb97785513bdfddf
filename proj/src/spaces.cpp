#include "equilog/spaces.hpp"

#include "equilog/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace equilog {

namespace {

const Quantale kTwo{QuantaleKind::Two};
const Quantale kPlus{QuantaleKind::PlusReversed};

Subset bit(std::size_t i) { return Subset{1} << i; }

bool contains(Subset s, std::size_t i) { return (s >> i) & 1u; }

std::string subset_name(const std::vector<std::string>& names, Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!contains(s, i)) continue;
    if (!first) out += ",";
    first = false;
    out += names[i];
  }
  return out + "}";
}

const ExtReal& real(const Value& v) { return std::get<ExtReal>(v); }

void require_kind(const VCatObj& x, QuantaleKind k, const char* what) {
  if (x.quantale().kind() != k) throw InputError(std::string(what) + " expects a " +
                                                 Quantale(k).name() + "-valued object");
}

/// Down-closed subsets of a preorder given as `below(x, y)` (x ≤ y).
std::vector<Subset> down_sets(std::size_t n, const std::vector<std::vector<bool>>& below) {
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    bool closed = true;
    for (std::size_t y = 0; y < n && closed; ++y) {
      if (!contains(s, y)) continue;
      for (std::size_t x = 0; x < n; ++x) {
        if (below[x][y] && !contains(s, x)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

std::vector<Subset> union_closure(std::vector<Subset> generators) {
  std::set<Subset> family(generators.begin(), generators.end());
  family.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subset> current(family.begin(), family.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (family.insert(current[i] | current[j]).second) grew = true;
      }
    }
  }
  return {family.begin(), family.end()};
}

}  // namespace

FinTop::FinTop(std::vector<std::string> carrier, std::vector<Subset> opens)
    : carrier_(std::move(carrier)), opens_(std::move(opens)) {
  if (size() > kMaxTopologyCarrier) {
    throw BoundExceeded("finite topologies are limited to " + std::to_string(kMaxTopologyCarrier) +
                        " points");
  }
  for (auto s : opens_) {
    if (s & ~whole()) throw InputError("open set mentions a point outside the carrier");
  }
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
}

bool FinTop::is_open(Subset s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

FinApp::FinApp(std::vector<std::string> carrier, std::vector<ExtReal> table)
    : carrier_(std::move(carrier)), table_(std::move(table)) {
  if (size() > kMaxApproachCarrier) {
    throw BoundExceeded("approach spaces are limited to " + std::to_string(kMaxApproachCarrier) +
                        " points (distance tables cover all subsets)");
  }
  if (table_.size() != size() * subset_count()) {
    throw InputError("approach distance table must have " +
                     std::to_string(size() * subset_count()) + " entries");
  }
}

Report verify_space(const FinTop& s) {
  Report r;
  r.add("empty-open", s.is_open(0), s.is_open(0) ? "" : "{} is not open");
  r.add("whole-open", s.is_open(s.whole()),
        s.is_open(s.whole()) ? "" : subset_name(s.carrier(), s.whole()) + " is not open");
  auto& unions = r.open("union-closed");
  auto& meets = r.open("intersection-closed");
  for (auto u : s.opens()) {
    for (auto v : s.opens()) {
      if (unions.passed && !s.is_open(u | v)) {
        unions.passed = false;
        unions.witness = subset_name(s.carrier(), u) + " ∪ " + subset_name(s.carrier(), v);
      }
      if (meets.passed && !s.is_open(u & v)) {
        meets.passed = false;
        meets.witness = subset_name(s.carrier(), u) + " ∩ " + subset_name(s.carrier(), v);
      }
    }
  }
  return r;
}

Report verify_space(const FinApp& s) {
  const auto& names = s.carrier();
  const auto n = s.size();
  const Subset count = static_cast<Subset>(s.subset_count());
  Report r;
  auto& members = r.open("zero-on-members");
  auto& empty = r.open("empty-infinite");
  auto& additive = r.open("finite-additivity");
  auto& hull = r.open("epsilon-hull");
  auto at = [&](std::size_t x, Subset a) {
    return "δ(" + names[x] + "," + subset_name(names, a) + ")";
  };
  auto fail = [](Check& c, std::string w) {
    if (c.passed) {
      c.passed = false;
      c.witness = std::move(w);
    }
  };

  std::set<ExtReal> epsilons{ExtReal(0)};
  for (const auto& v : s.table()) {
    if (!v.is_infinite()) epsilons.insert(v);
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (!s.distance(x, 0).is_infinite()) fail(empty, at(x, 0) + "=" + s.distance(x, 0).str());
    for (Subset a = 0; a < count; ++a) {
      if (contains(a, x) && !(s.distance(x, a) == ExtReal(0))) {
        fail(members, at(x, a) + "=" + s.distance(x, a).str());
      }
      for (Subset b = 0; b < count; ++b) {
        if (!(s.distance(x, a | b) == std::min(s.distance(x, a), s.distance(x, b)))) {
          fail(additive, at(x, a) + " and " + at(x, b));
        }
      }
      for (const auto& eps : epsilons) {
        Subset expanded = 0;
        for (std::size_t y = 0; y < n; ++y) {
          if (s.distance(y, a) <= eps) expanded |= bit(y);
        }
        if (!(s.distance(x, a) <= s.distance(x, expanded) + eps)) {
          fail(hull, at(x, a) + " with ε=" + eps.str());
        }
      }
    }
  }
  return r;
}

Subset image(const Map& f, Subset a) {
  Subset out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (contains(a, i)) out |= bit(f[i]);
  }
  return out;
}

Subset preimage(const Map& f, Subset b, std::size_t dom_size) {
  Subset out = 0;
  for (std::size_t i = 0; i < dom_size; ++i) {
    if (contains(b, f[i])) out |= bit(i);
  }
  return out;
}

bool is_continuous(const FinTop& dom, const FinTop& cod, const Map& f) {
  if (f.size() != dom.size()) return false;
  for (auto v : f) {
    if (v >= cod.size()) return false;
  }
  return std::all_of(cod.opens().begin(), cod.opens().end(),
                     [&](Subset u) { return dom.is_open(preimage(f, u, dom.size())); });
}

bool is_contraction(const FinApp& dom, const FinApp& cod, const Map& f) {
  if (f.size() != dom.size()) return false;
  for (auto v : f) {
    if (v >= cod.size()) return false;
  }
  for (std::size_t x = 0; x < dom.size(); ++x) {
    for (Subset a = 0; a < dom.subset_count(); ++a) {
      if (dom.distance(x, a) < cod.distance(f[x], image(f, a))) return false;
    }
  }
  return true;
}

VCatObj ord_to_met(const VCatObj& ord) {
  require_kind(ord, QuantaleKind::Two, "ord-to-met");
  VCatObj out(kPlus, ord.carrier());
  for (std::size_t i = 0; i < ord.size(); ++i) {
    for (std::size_t j = 0; j < ord.size(); ++j) {
      out.set(i, j, std::get<bool>(ord(i, j)) ? ExtReal(0) : ExtReal::infinity());
    }
  }
  return out;
}

VCatObj met_to_ord(const VCatObj& met) {
  require_kind(met, QuantaleKind::PlusReversed, "met-to-ord");
  VCatObj out(kTwo, met.carrier());
  for (std::size_t i = 0; i < met.size(); ++i) {
    for (std::size_t j = 0; j < met.size(); ++j) out.set(i, j, !real(met(i, j)).is_infinite());
  }
  return out;
}

FinTop ord_to_top(const VCatObj& ord) {
  require_kind(ord, QuantaleKind::Two, "ord-to-top");
  const auto n = ord.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) below[i][j] = std::get<bool>(ord(i, j));
  }
  return FinTop(ord.carrier(), down_sets(n, below));
}

VCatObj top_to_ord(const FinTop& top) {
  const auto n = top.size();
  VCatObj out(kTwo, top.carrier());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool le = std::all_of(top.opens().begin(), top.opens().end(),
                            [&](Subset u) { return !contains(u, y) || contains(u, x); });
      out.set(x, y, le);
    }
  }
  return out;
}

FinApp met_to_app(const VCatObj& met) {
  require_kind(met, QuantaleKind::PlusReversed, "met-to-app");
  const auto n = met.size();
  if (n > kMaxApproachCarrier) {
    throw BoundExceeded("approach spaces are limited to " + std::to_string(kMaxApproachCarrier) +
                        " points");
  }
  const Subset count = Subset{1} << n;
  std::vector<ExtReal> table(n * count);
  for (std::size_t target = 0; target < n; ++target) {
    for (Subset a = 0; a < count; ++a) {
      ExtReal best = ExtReal::infinity();
      for (std::size_t x = 0; x < n; ++x) {
        if (contains(a, x)) best = std::min(best, real(met(x, target)));
      }
      table[target * count + a] = best;
    }
  }
  return FinApp(met.carrier(), std::move(table));
}

VCatObj app_to_met(const FinApp& app) {
  const auto n = app.size();
  VCatObj out(kPlus, app.carrier());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t target = 0; target < n; ++target) {
      ExtReal sup(0);
      for (Subset a = 0; a < app.subset_count(); ++a) {
        if (contains(a, x)) sup = std::max(sup, app.distance(target, a));
      }
      out.set(x, target, sup);
    }
  }
  return out;
}

FinApp top_to_app(const FinTop& top) {
  const auto n = top.size();
  if (n > kMaxApproachCarrier) {
    throw BoundExceeded("approach spaces are limited to " + std::to_string(kMaxApproachCarrier) +
                        " points");
  }
  // the principal ultrafilter at y converges to x' iff every open set around x' contains y
  auto converges = [&](std::size_t y, std::size_t target) {
    return std::all_of(top.opens().begin(), top.opens().end(),
                       [&](Subset u) { return !contains(u, target) || contains(u, y); });
  };
  const Subset count = Subset{1} << n;
  std::vector<ExtReal> table(n * count, ExtReal::infinity());
  for (std::size_t target = 0; target < n; ++target) {
    for (Subset a = 0; a < count; ++a) {
      for (std::size_t y = 0; y < n; ++y) {
        if (contains(a, y) && converges(y, target)) {
          table[target * count + a] = ExtReal(0);
          break;
        }
      }
    }
  }
  return FinApp(top.carrier(), std::move(table));
}

FinTop app_to_top(const FinApp& app) {
  const auto n = app.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    below[x][x] = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (!app.distance(y, bit(x)).is_infinite()) below[x][y] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (below[i][k] && below[k][j]) below[i][j] = true;
      }
    }
  }
  return FinTop(app.carrier(), down_sets(n, below));
}

FinTop top_product(const FinTop& x, const FinTop& y) {
  const auto m = y.size();
  std::vector<std::string> names;
  for (const auto& a : x.carrier()) {
    for (const auto& b : y.carrier()) names.push_back("(" + a + "," + b + ")");
  }
  std::vector<Subset> rectangles;
  for (auto u : x.opens()) {
    for (auto v : y.opens()) {
      Subset r = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (contains(u, i) && contains(v, j)) r |= bit(i * m + j);
        }
      }
      rectangles.push_back(r);
    }
  }
  return FinTop(std::move(names), union_closure(std::move(rectangles)));
}

FinTop top_coproduct(const FinTop& x, const FinTop& y) {
  std::vector<std::string> names;
  for (const auto& a : x.carrier()) names.push_back("0:" + a);
  for (const auto& b : y.carrier()) names.push_back("1:" + b);
  std::vector<Subset> opens;
  for (auto u : x.opens()) {
    for (auto v : y.opens()) opens.push_back(u | (v << x.size()));
  }
  return FinTop(std::move(names), std::move(opens));
}

FinTop top_subspace(const FinTop& x, const std::vector<std::size_t>& points) {
  std::vector<std::string> names;
  for (auto p : points) names.push_back(x.carrier().at(p));
  std::vector<Subset> opens;
  for (auto u : x.opens()) {
    Subset s = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (contains(u, points[i])) s |= bit(i);
    }
    opens.push_back(s);
  }
  return FinTop(std::move(names), std::move(opens));
}

FinApp app_product(const FinApp& x, const FinApp& y) {
  // every finite approach space is metric, so the product is that of the max-metric
  return met_to_app(vcat_product(app_to_met(x), app_to_met(y)).object);
}

FinApp app_coproduct(const FinApp& x, const FinApp& y) {
  std::vector<std::string> names;
  for (const auto& a : x.carrier()) names.push_back("0:" + a);
  for (const auto& b : y.carrier()) names.push_back("1:" + b);
  const auto n = x.size() + y.size();
  if (n > kMaxApproachCarrier) {
    throw BoundExceeded("approach spaces are limited to " + std::to_string(kMaxApproachCarrier) +
                        " points");
  }
  const Subset count = Subset{1} << n;
  const Subset xmask = static_cast<Subset>((Subset{1} << x.size()) - 1);
  std::vector<ExtReal> table(n * count);
  for (std::size_t p = 0; p < n; ++p) {
    for (Subset a = 0; a < count; ++a) {
      table[p * count + a] = p < x.size() ? x.distance(p, a & xmask)
                                          : y.distance(p - x.size(), a >> x.size());
    }
  }
  return FinApp(std::move(names), std::move(table));
}

FinApp app_subspace(const FinApp& x, const std::vector<std::size_t>& points) {
  std::vector<std::string> names;
  for (auto p : points) names.push_back(x.carrier().at(p));
  const auto n = points.size();
  const Subset count = Subset{1} << n;
  std::vector<ExtReal> table(n * count);
  for (std::size_t i = 0; i < n; ++i) {
    for (Subset a = 0; a < count; ++a) {
      Subset lifted = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (contains(a, k)) lifted |= bit(points[k]);
      }
      table[i * count + a] = x.distance(points[i], lifted);
    }
  }
  return FinApp(std::move(names), std::move(table));
}

std::vector<FinTop> enumerate_topologies(std::size_t n) {
  if (n > 4) throw BoundExceeded("topology enumeration is limited to 4 points");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  const Subset whole = static_cast<Subset>((Subset{1} << n) - 1);
  std::vector<Subset> middle;
  for (Subset s = 1; s < whole; ++s) middle.push_back(s);
  std::vector<FinTop> out;
  const std::uint64_t families = std::uint64_t{1} << middle.size();
  for (std::uint64_t choice = 0; choice < families; ++choice) {
    std::vector<Subset> opens{0, whole};
    for (std::size_t k = 0; k < middle.size(); ++k) {
      if ((choice >> k) & 1u) opens.push_back(middle[k]);
    }
    FinTop candidate(names, opens);
    if (verify_space(candidate).passed()) out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace equilog
