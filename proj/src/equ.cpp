#include "equilog/equ.hpp"

#include "equilog/errors.hpp"

#include <set>

namespace equilog {

namespace {

std::vector<std::size_t> iota_points(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

void require_arrow(const EquObj& x, const EquObj& y, const Map& f, const char* what) {
  if (!is_base_morphism(x.base, y.base, f) || !is_equivariant(x.equiv, y.equiv, f)) {
    throw InputError(std::string(what) + ": arrow is not an equivariant morphism");
  }
}

}  // namespace

EquObj make_equ(Base base, Per equiv) {
  if (equiv.size() != base_size(base)) {
    throw InputError("equivalence relation covers " + std::to_string(equiv.size()) +
                     " points but the carrier has " + std::to_string(base_size(base)));
  }
  if (!equiv.is_total()) throw InputError("equivalence relation must be reflexive on the carrier");
  return EquObj{std::move(base), std::move(equiv)};
}

Report verify_equ_object(const EquObj& e) {
  Report r = verify_base(e.base);
  auto& total = r.open("equivalence-total");
  if (e.equiv.size() != base_size(e.base)) {
    total.passed = false;
    total.witness = "relation size differs from carrier";
  } else if (!e.equiv.is_total()) {
    total.passed = false;
    total.witness = "some point is outside every block";
  }
  return r;
}

bool is_equivariant(const Per& dom, const Per& cod, const Map& f) {
  if (f.size() != dom.size()) return false;
  for (std::size_t x = 0; x < dom.size(); ++x) {
    if (!dom.defined(x)) continue;
    if (f[x] >= cod.size() || !cod.defined(f[x])) return false;
    for (std::size_t y = x + 1; y < dom.size(); ++y) {
      if (dom.related(x, y) && !cod.related(f[x], f[y])) return false;
    }
  }
  return true;
}

bool same_class(const Per& dom, const Per& cod, const Map& f, const Map& g) {
  for (std::size_t x = 0; x < dom.size(); ++x) {
    for (std::size_t y = 0; y < dom.size(); ++y) {
      if (dom.related(x, y) && !cod.related(f[x], g[y])) return false;
    }
  }
  return true;
}

Report verify_equ_morphism(const MorphClass& f) {
  Report r;
  const auto& names = base_carrier(f.dom.base);
  bool base_ok = is_base_morphism(f.dom.base, f.cod.base, f.rep);
  r.add("base-morphism", base_ok,
        base_ok ? "" : "map is not a " + base_category(f.dom.base) + " morphism");
  auto& eq = r.open("equivariance");
  if (f.rep.size() != f.dom.equiv.size()) {
    eq.passed = false;
    eq.witness = "map size differs from carrier";
    return r;
  }
  const auto& cod_names = base_carrier(f.cod.base);
  for (std::size_t x = 0; x < f.rep.size() && eq.passed; ++x) {
    for (std::size_t y = 0; y < f.rep.size(); ++y) {
      if (f.dom.equiv.related(x, y) &&
          (f.rep[x] >= cod_names.size() || !f.cod.equiv.related(f.rep[x], f.rep[y]))) {
        eq.passed = false;
        eq.witness = names[x] + " ≡ " + names[y] + " but images are not related";
        break;
      }
    }
  }
  return r;
}

bool morph_equal(const MorphClass& f, const MorphClass& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod)) {
    throw InputError("morphisms do not share domain and codomain");
  }
  return same_class(f.dom.equiv, f.cod.equiv, f.rep, g.rep);
}

Map compose(const Map& g, const Map& f) {
  Map out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g.at(f[i]);
  return out;
}

MorphClass compose(const MorphClass& g, const MorphClass& f) {
  if (!(f.cod == g.dom)) throw InputError("morphisms are not composable");
  return MorphClass{f.dom, g.cod, compose(g.rep, f.rep)};
}

MorphClass identity(const EquObj& e) { return MorphClass{e, e, iota_points(base_size(e.base))}; }

std::vector<std::size_t> block_representatives(const Per& p) {
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.label(x) == static_cast<int>(reps.size())) reps.push_back(x);
  }
  return reps;
}

ClassKey class_key(const std::vector<std::size_t>& dom_reps, const Per& cod, const Map& f) {
  if (dom_reps.size() > ClassKey::kCapacity) {
    throw BoundExceeded("class keys support at most " + std::to_string(ClassKey::kCapacity) +
                        " domain blocks");
  }
  ClassKey key;
  key.size = static_cast<std::uint8_t>(dom_reps.size());
  for (std::size_t b = 0; b < dom_reps.size(); ++b) {
    int l = cod.label(f[dom_reps[b]]);
    if (l < 0 || l > 255) throw BoundExceeded("codomain block index exceeds class-key range");
    key.labels[b] = static_cast<std::uint8_t>(l);
  }
  return key;
}

ClassKey class_key(const Per& dom, const Per& cod, const Map& f) {
  return class_key(block_representatives(dom), cod, f);
}

std::vector<ClassRep> enumerate_classes(const Base& xb, const Per& xp, const Base& yb,
                                        const Per& yp, std::size_t limit) {
  require_same_category(xb, yb);
  const auto reps = block_representatives(xp);
  std::set<ClassKey> seen;
  std::vector<ClassRep> out;
  for_each_base_morphism(
      xb, yb,
      [&](const Map& f, std::size_t i) {
        if (!xp.defined(i)) return true;
        if (!yp.defined(f[i])) return false;
        for (std::size_t j = 0; j < i; ++j) {
          if (xp.related(i, j) && !yp.related(f[i], f[j])) return false;
        }
        return true;
      },
      [&](const Map& f) {
        auto key = class_key(reps, yp, f);
        if (seen.insert(key).second) {
          if (out.size() == limit) {
            throw BoundExceeded("more than " + std::to_string(limit) + " morphism classes");
          }
          out.push_back({key, f});
        }
        return true;
      });
  return out;
}

std::vector<ClassRep> enumerate_classes(const EquObj& x, const EquObj& y) {
  return enumerate_classes(x.base, x.equiv, y.base, y.equiv);
}

std::optional<Isomorphism> find_isomorphism(const Base& ab, const Per& ap, const Base& bb,
                                            const Per& bp) {
  if (!same_category(ab, bb) || ap.block_count() != bp.block_count()) return std::nullopt;
  const auto there = enumerate_classes(ab, ap, bb, bp);
  if (there.empty()) return std::nullopt;
  const auto back = enumerate_classes(bb, bp, ab, ap);
  const auto a_reps = block_representatives(ap);
  const auto b_reps = block_representatives(bp);
  ClassKey id_a = class_key(a_reps, ap, iota_points(ap.size()));
  ClassKey id_b = class_key(b_reps, bp, iota_points(bp.size()));
  for (const auto& f : there) {
    for (const auto& g : back) {
      if (class_key(a_reps, ap, compose(g.rep, f.rep)) == id_a &&
          class_key(b_reps, bp, compose(f.rep, g.rep)) == id_b) {
        return Isomorphism{f.rep, g.rep};
      }
    }
  }
  return std::nullopt;
}

std::optional<Isomorphism> find_isomorphism(const EquObj& a, const EquObj& b) {
  return find_isomorphism(a.base, a.equiv, b.base, b.equiv);
}

MonoEpi classify_mono_epi(const MorphClass& f) {
  const auto& dp = f.dom.equiv;
  const auto& cp = f.cod.equiv;
  MonoEpi out{true, true};
  for (std::size_t x = 0; x < dp.size(); ++x) {
    for (std::size_t y = 0; y < dp.size(); ++y) {
      if (dp.related(x, y) != cp.related(f.rep[x], f.rep[y])) out.mono = false;
    }
  }
  std::vector<bool> hit(cp.block_count(), false);
  for (std::size_t x = 0; x < dp.size(); ++x) hit[static_cast<std::size_t>(cp.label(f.rep[x]))] = true;
  for (bool h : hit) {
    if (!h) out.epi = false;
  }
  return out;
}

LimitKind limit_kind_from_name(std::string_view name) {
  if (name == "product") return LimitKind::Product;
  if (name == "coproduct") return LimitKind::Coproduct;
  if (name == "equalizer") return LimitKind::Equalizer;
  if (name == "coequalizer") return LimitKind::Coequalizer;
  if (name == "terminal") return LimitKind::Terminal;
  if (name == "initial") return LimitKind::Initial;
  throw InputError("unknown limit kind '" + std::string(name) + "'");
}

std::string limit_kind_name(LimitKind kind) {
  switch (kind) {
    case LimitKind::Product: return "product";
    case LimitKind::Coproduct: return "coproduct";
    case LimitKind::Equalizer: return "equalizer";
    case LimitKind::Coequalizer: return "coequalizer";
    case LimitKind::Terminal: return "terminal";
    case LimitKind::Initial: return "initial";
  }
  return "?";
}

Cone equ_product(const EquObj& x, const EquObj& y) {
  const auto n = base_size(x.base), m = base_size(y.base);
  Base base = base_product(x.base, y.base);
  const int blocks_y = static_cast<int>(y.equiv.block_count());
  std::vector<int> labels(n * m);
  Map first(n * m), second(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      labels[i * m + j] = x.equiv.label(i) * blocks_y + y.equiv.label(j);
      first[i * m + j] = i;
      second[i * m + j] = j;
    }
  }
  return Cone{make_equ(std::move(base), Per(std::move(labels))), {first, second}};
}

Cone equ_coproduct(const EquObj& x, const EquObj& y) {
  const auto n = base_size(x.base), m = base_size(y.base);
  Base base = base_coproduct(x.base, y.base);
  const int offset = static_cast<int>(x.equiv.block_count());
  std::vector<int> labels;
  Map first(n), second(m);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(x.equiv.label(i));
    first[i] = i;
  }
  for (std::size_t j = 0; j < m; ++j) {
    labels.push_back(offset + y.equiv.label(j));
    second[j] = n + j;
  }
  return Cone{make_equ(std::move(base), Per(std::move(labels))), {first, second}};
}

Cone equ_equalizer(const EquObj& x, const EquObj& y, const Map& f, const Map& g) {
  require_arrow(x, y, f, "equalizer");
  require_arrow(x, y, g, "equalizer");
  std::vector<std::size_t> points;
  std::vector<int> labels;
  for (std::size_t i = 0; i < base_size(x.base); ++i) {
    if (y.equiv.related(f[i], g[i])) {
      points.push_back(i);
      labels.push_back(x.equiv.label(i));
    }
  }
  return Cone{make_equ(base_subspace(x.base, points), Per(std::move(labels))), {points}};
}

Cone equ_coequalizer(const EquObj& x, const EquObj& y, const Map& f, const Map& g) {
  require_arrow(x, y, f, "coequalizer");
  require_arrow(x, y, g, "coequalizer");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < y.equiv.size(); ++i) {
    for (std::size_t j = i + 1; j < y.equiv.size(); ++j) {
      if (y.equiv.related(i, j)) pairs.emplace_back(i, j);
    }
  }
  for (std::size_t i = 0; i < f.size(); ++i) pairs.emplace_back(f[i], g[i]);
  return Cone{make_equ(y.base, Per::equivalence_closure(y.equiv.size(), pairs)),
              {iota_points(y.equiv.size())}};
}

Cone equ_terminal(const Base& like) { return Cone{make_equ(base_terminal(like), Per::full(1)), {}}; }

Cone equ_initial(const Base& like) { return Cone{make_equ(base_initial(like), Per::full(0)), {}}; }

Cone limit_colimit(LimitKind kind, std::span<const EquObj> objects,
                   std::span<const MorphClass> arrows) {
  auto arity = [&](std::size_t objs, std::size_t arrs) {
    if (objects.size() != objs || arrows.size() != arrs) {
      throw InputError(limit_kind_name(kind) + " takes " + std::to_string(objs) +
                       " object(s) and " + std::to_string(arrs) + " arrow(s)");
    }
  };
  switch (kind) {
    case LimitKind::Product:
      arity(2, 0);
      return equ_product(objects[0], objects[1]);
    case LimitKind::Coproduct:
      arity(2, 0);
      return equ_coproduct(objects[0], objects[1]);
    case LimitKind::Equalizer:
    case LimitKind::Coequalizer: {
      arity(0, 2);
      const auto& f = arrows[0];
      const auto& g = arrows[1];
      if (!(f.dom == g.dom) || !(f.cod == g.cod)) throw InputError("arrows are not parallel");
      return kind == LimitKind::Equalizer ? equ_equalizer(f.dom, f.cod, f.rep, g.rep)
                                          : equ_coequalizer(f.dom, f.cod, f.rep, g.rep);
    }
    case LimitKind::Terminal:
      arity(1, 0);
      return equ_terminal(objects[0].base);
    case LimitKind::Initial:
      arity(1, 0);
      return equ_initial(objects[0].base);
  }
  throw InputError("unknown limit kind");
}

TransferPair transfer_pair_from_name(std::string_view name) {
  if (name == "ord-met") return TransferPair::OrdMet;
  if (name == "ord-top") return TransferPair::OrdTop;
  if (name == "met-app") return TransferPair::MetApp;
  if (name == "top-app") return TransferPair::TopApp;
  throw InputError("unknown transfer pair '" + std::string(name) + "'");
}

std::string transfer_pair_name(TransferPair pair) {
  switch (pair) {
    case TransferPair::OrdMet: return "ord-met";
    case TransferPair::OrdTop: return "ord-top";
    case TransferPair::MetApp: return "met-app";
    case TransferPair::TopApp: return "top-app";
  }
  return "?";
}

std::string transfer_source(TransferPair which, Direction direction) {
  static const char* right_src[] = {"two", "two", "plus", "top"};
  static const char* left_src[] = {"plus", "top", "app", "app"};
  auto i = static_cast<std::size_t>(which);
  return direction == Direction::Rightward ? right_src[i] : left_src[i];
}

Base transfer_base(const Base& b, TransferPair which, Direction direction) {
  const auto expected = transfer_source(which, direction);
  if (base_category(b) != expected) {
    throw InputError(transfer_pair_name(which) + " " +
                     (direction == Direction::Rightward ? "rightward" : "leftward") +
                     " expects a " + expected + " base, got " + base_category(b));
  }
  const bool right = direction == Direction::Rightward;
  switch (which) {
    case TransferPair::OrdMet:
      return right ? Base(ord_to_met(std::get<VCatObj>(b))) : Base(met_to_ord(std::get<VCatObj>(b)));
    case TransferPair::OrdTop:
      return right ? Base(ord_to_top(std::get<VCatObj>(b))) : Base(top_to_ord(std::get<FinTop>(b)));
    case TransferPair::MetApp:
      return right ? Base(met_to_app(std::get<VCatObj>(b))) : Base(app_to_met(std::get<FinApp>(b)));
    case TransferPair::TopApp:
      return right ? Base(top_to_app(std::get<FinTop>(b))) : Base(app_to_top(std::get<FinApp>(b)));
  }
  throw InputError("unknown transfer pair");
}

EquObj adjunction_transfer(const EquObj& obj, TransferPair which, Direction direction) {
  return make_equ(transfer_base(obj.base, which, direction), obj.equiv);
}

}  // namespace equilog
