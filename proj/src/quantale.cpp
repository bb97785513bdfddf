#include "equilog/quantale.hpp"

#include "equilog/errors.hpp"

#include <algorithm>
#include <set>

namespace equilog {

namespace {

bool as_bool(const Value& v) { return std::get<bool>(v); }
const DiamondValue& as_diamond(const Value& v) { return std::get<DiamondValue>(v); }
const ExtReal& as_real(const Value& v) { return std::get<ExtReal>(v); }

bool reversed(QuantaleKind k) {
  return k == QuantaleKind::PlusReversed || k == QuantaleKind::MaxReversed;
}

}  // namespace

bool Quantale::is_finite() const { return !reversed(kind_); }

Value Quantale::unit() const { return top(); }

Value Quantale::top() const {
  switch (kind_) {
    case QuantaleKind::Two: return true;
    case QuantaleKind::Diamond: return DiamondValue{true, true};
    default: return ExtReal(0);
  }
}

Value Quantale::bottom() const {
  switch (kind_) {
    case QuantaleKind::Two: return false;
    case QuantaleKind::Diamond: return DiamondValue{false, false};
    default: return ExtReal::infinity();
  }
}

bool Quantale::contains(const Value& v) const {
  switch (kind_) {
    case QuantaleKind::Two: return std::holds_alternative<bool>(v);
    case QuantaleKind::Diamond: return std::holds_alternative<DiamondValue>(v);
    default: return std::holds_alternative<ExtReal>(v);
  }
}

bool Quantale::leq(const Value& a, const Value& b) const {
  switch (kind_) {
    case QuantaleKind::Two: return !as_bool(a) || as_bool(b);
    case QuantaleKind::Diamond: {
      const auto& x = as_diamond(a);
      const auto& y = as_diamond(b);
      return (!x.left || y.left) && (!x.right || y.right);
    }
    default: return as_real(b) <= as_real(a);
  }
}

Value Quantale::tensor(const Value& a, const Value& b) const {
  switch (kind_) {
    case QuantaleKind::Two:
    case QuantaleKind::Diamond: return meet(a, b);
    case QuantaleKind::PlusReversed: return as_real(a) + as_real(b);
    case QuantaleKind::MaxReversed: return std::max(as_real(a), as_real(b));
  }
  return {};
}

Value Quantale::join(const Value& a, const Value& b) const {
  switch (kind_) {
    case QuantaleKind::Two: return as_bool(a) || as_bool(b);
    case QuantaleKind::Diamond: {
      const auto& x = as_diamond(a);
      const auto& y = as_diamond(b);
      return DiamondValue{x.left || y.left, x.right || y.right};
    }
    default: return std::min(as_real(a), as_real(b));
  }
}

Value Quantale::meet(const Value& a, const Value& b) const {
  switch (kind_) {
    case QuantaleKind::Two: return as_bool(a) && as_bool(b);
    case QuantaleKind::Diamond: {
      const auto& x = as_diamond(a);
      const auto& y = as_diamond(b);
      return DiamondValue{x.left && y.left, x.right && y.right};
    }
    default: return std::max(as_real(a), as_real(b));
  }
}

Value Quantale::hom(const Value& v, const Value& w) const {
  switch (kind_) {
    case QuantaleKind::Two:
    case QuantaleKind::Diamond: return implies(v, w);
    case QuantaleKind::PlusReversed:
      // u + v >= w numerically, smallest such u.
      return as_real(w).monus(as_real(v));
    case QuantaleKind::MaxReversed:
      return as_real(v) >= as_real(w) ? ExtReal(0) : as_real(w);
  }
  return {};
}

Value Quantale::implies(const Value& v, const Value& w) const {
  switch (kind_) {
    case QuantaleKind::Two: return !as_bool(v) || as_bool(w);
    case QuantaleKind::Diamond: {
      const auto& x = as_diamond(v);
      const auto& y = as_diamond(w);
      return DiamondValue{!x.left || y.left, !x.right || y.right};
    }
    default:
      // meet is numeric max, so this is the max-quantale residual
      return as_real(v) >= as_real(w) ? ExtReal(0) : as_real(w);
  }
}

std::vector<Value> Quantale::carrier() const {
  switch (kind_) {
    case QuantaleKind::Two: return {false, true};
    case QuantaleKind::Diamond:
      return {DiamondValue{false, false}, DiamondValue{true, false}, DiamondValue{false, true},
              DiamondValue{true, true}};
    default: throw InputError("quantale " + name() + " has an infinite carrier");
  }
}

std::vector<Value> Quantale::default_grid() const {
  if (is_finite()) return carrier();
  return {ExtReal(0), ExtReal(1, 2), ExtReal(1), ExtReal(2), ExtReal(3), ExtReal::infinity()};
}

std::string Quantale::format(const Value& v) const {
  if (!contains(v)) throw InputError("value does not belong to quantale " + name());
  switch (kind_) {
    case QuantaleKind::Two: return as_bool(v) ? "top" : "bot";
    case QuantaleKind::Diamond: {
      const auto& d = as_diamond(v);
      if (d.left && d.right) return "top";
      if (d.left) return "u";
      if (d.right) return "v";
      return "bot";
    }
    default: return as_real(v).str();
  }
}

Value Quantale::parse(std::string_view text) const {
  switch (kind_) {
    case QuantaleKind::Two:
      if (text == "top" || text == "1" || text == "true") return true;
      if (text == "bot" || text == "0" || text == "false") return false;
      break;
    case QuantaleKind::Diamond:
      if (text == "top") return DiamondValue{true, true};
      if (text == "u") return DiamondValue{true, false};
      if (text == "v") return DiamondValue{false, true};
      if (text == "bot") return DiamondValue{false, false};
      break;
    default: return ExtReal::parse(text);
  }
  throw InputError("'" + std::string(text) + "' is not an element of quantale " + name());
}

std::string Quantale::name() const {
  switch (kind_) {
    case QuantaleKind::Two: return "two";
    case QuantaleKind::Diamond: return "diamond";
    case QuantaleKind::PlusReversed: return "plus";
    case QuantaleKind::MaxReversed: return "max";
  }
  return {};
}

Quantale Quantale::from_name(std::string_view name) {
  if (name == "two") return Quantale(QuantaleKind::Two);
  if (name == "diamond") return Quantale(QuantaleKind::Diamond);
  if (name == "plus") return Quantale(QuantaleKind::PlusReversed);
  if (name == "max") return Quantale(QuantaleKind::MaxReversed);
  throw InputError("unknown quantale '" + std::string(name) + "'");
}

Value hom_residual(const Quantale& q, const Value& v, const Value& w) { return q.hom(v, w); }

QuantaleSignature QuantaleSignature::of(const Quantale& q) {
  QuantaleSignature s;
  s.leq = [q](const Value& a, const Value& b) { return q.leq(a, b); };
  s.tensor = [q](const Value& a, const Value& b) { return q.tensor(a, b); };
  s.join = [q](const Value& a, const Value& b) { return q.join(a, b); };
  s.meet = [q](const Value& a, const Value& b) { return q.meet(a, b); };
  s.hom = [q](const Value& a, const Value& b) { return q.hom(a, b); };
  s.implies = [q](const Value& a, const Value& b) { return q.implies(a, b); };
  s.format = [q](const Value& a) { return q.format(a); };
  s.unit = q.unit();
  s.top = q.top();
  s.bottom = q.bottom();
  return s;
}

Report verify_quantale(const Quantale& q, std::span<const Value> probe) {
  for (const auto& v : probe) {
    if (!q.contains(v)) throw InputError("probe value outside quantale " + q.name());
  }
  return verify_laws(QuantaleSignature::of(q), probe);
}

Report verify_laws(const QuantaleSignature& s, std::span<const Value> probe) {
  auto eq = [&](const Value& a, const Value& b) { return s.leq(a, b) && s.leq(b, a); };
  auto show = [&](std::initializer_list<std::pair<const char*, const Value*>> vals) {
    std::string out;
    for (const auto& [label, v] : vals) {
      if (!out.empty()) out += ", ";
      out += std::string(label) + "=" + s.format(*v);
    }
    return out;
  };

  Report report;
  auto& assoc = report.open("associativity");
  auto& comm = report.open("commutativity");
  auto& unit = report.open("unit");
  auto& joins = report.open("join-preservation");
  auto& resid = report.open("residuation");
  auto& heyting = report.open("heyting");
  auto& distrib = report.open("distributivity");
  auto& order = report.open("lattice-order");
  auto& integral = report.open("integrality");

  auto fail = [](Check& c, std::string witness) {
    if (!c.passed) return;
    c.passed = false;
    c.witness = std::move(witness);
  };

  if (!eq(s.unit, s.top)) fail(integral, "k=" + s.format(s.unit) + ", top=" + s.format(s.top));

  for (const auto& u : probe) {
    if (!eq(s.tensor(s.unit, u), u) || !eq(s.tensor(u, s.unit), u)) {
      fail(unit, show({{"u", &u}}));
    }
    if (!eq(s.tensor(u, s.bottom), s.bottom)) fail(joins, show({{"u", &u}}) + " (empty join)");
    for (const auto& v : probe) {
      if (!eq(s.tensor(u, v), s.tensor(v, u))) fail(comm, show({{"u", &u}, {"v", &v}}));
      bool le = s.leq(u, v);
      if (le != eq(s.join(u, v), v) || le != eq(s.meet(u, v), u)) {
        fail(order, show({{"u", &u}, {"v", &v}}));
      }
      for (const auto& w : probe) {
        if (!eq(s.tensor(s.tensor(u, v), w), s.tensor(u, s.tensor(v, w)))) {
          fail(assoc, show({{"u", &u}, {"v", &v}, {"w", &w}}));
        }
        if (!eq(s.tensor(u, s.join(v, w)), s.join(s.tensor(u, v), s.tensor(u, w)))) {
          fail(joins, show({{"u", &u}, {"v", &v}, {"w", &w}}));
        }
        if (s.leq(s.tensor(u, v), w) != s.leq(u, s.hom(v, w))) {
          fail(resid, show({{"u", &u}, {"v", &v}, {"w", &w}}));
        }
        if (s.leq(s.meet(u, v), w) != s.leq(u, s.implies(v, w))) {
          fail(heyting, show({{"u", &u}, {"v", &v}, {"w", &w}}));
        }
        if (!eq(s.meet(u, s.join(v, w)), s.join(s.meet(u, v), s.meet(u, w)))) {
          fail(distrib, show({{"u", &u}, {"v", &v}, {"w", &w}}));
        }
      }
    }
  }
  return report;
}

std::vector<Value> residual_closure(const Quantale& q, std::span<const Value> seed,
                                    std::size_t limit) {
  std::set<Value> closed(seed.begin(), seed.end());
  std::vector<Value> frontier(seed.begin(), seed.end());
  while (!frontier.empty()) {
    std::vector<Value> current(closed.begin(), closed.end());
    std::vector<Value> fresh;
    for (const auto& a : frontier) {
      for (const auto& b : current) {
        for (const auto& c : {q.hom(a, b), q.hom(b, a), q.meet(a, b), q.join(a, b)}) {
          if (closed.insert(c).second) fresh.push_back(c);
        }
      }
    }
    if (closed.size() > limit) {
      throw BoundExceeded("residual closure exceeds " + std::to_string(limit) + " elements");
    }
    frontier = std::move(fresh);
  }
  return {closed.begin(), closed.end()};
}

bool check_exp_condition(const Quantale& q, std::span<const Value> probe) {
  auto candidates = residual_closure(q, probe);
  for (const auto& u : probe) {
    for (const auto& v : probe) {
      for (const auto& w : probe) {
        Value lhs = q.meet(w, q.tensor(u, v));
        Value rhs = q.bottom();
        for (const auto& u2 : candidates) {
          if (!q.leq(u2, u)) continue;
          for (const auto& v2 : candidates) {
            if (!q.leq(v2, v)) continue;
            Value t = q.tensor(u2, v2);
            if (q.leq(t, w)) rhs = q.join(rhs, t);
          }
        }
        if (!(q.leq(lhs, rhs) && q.leq(rhs, lhs))) return false;
      }
    }
  }
  return true;
}

}  // namespace equilog
