#include "equilog/oracle.hpp"

#include "equilog/errors.hpp"
#include "equilog/universe.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace equilog {

namespace {

std::string describe(const Base& b) {
  std::string out = base_category(b) + " object on {";
  const auto& names = base_carrier(b);
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  out += "}";
  if (const auto* x = std::get_if<VCatObj>(&b)) {
    out += " with a = [";
    for (std::size_t i = 0; i < x->entries().size(); ++i) {
      out += (i ? " " : "") + x->quantale().format(x->entries()[i]);
    }
    out += "]";
  } else if (const auto* t = std::get_if<FinTop>(&b)) {
    out += " with " + std::to_string(t->opens().size()) + " open sets";
  }
  return out;
}

std::string describe(const EquObj& e) {
  std::string out = describe(e.base) + ", blocks ";
  const auto& names = base_carrier(e.base);
  for (const auto& block : e.equiv.blocks()) {
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + names[block[i]];
    out += "}";
  }
  return out;
}

std::string describe_map(const Map& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  return out + "]";
}

std::set<Map> all_morphisms(const EquObj& x, const EquObj& y) {
  std::set<Map> out;
  for_each_base_morphism(
      x.base, y.base,
      [&](const Map& f, std::size_t i) {
        for (std::size_t j = 0; j <= i; ++j) {
          if (x.equiv.related(i, j) && !y.equiv.related(f[i], f[j])) return false;
        }
        return true;
      },
      [&](const Map& f) {
        out.insert(f);
        return true;
      });
  return out;
}

Map identity_map(std::size_t n) {
  Map id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return id;
}

/// The preorder on V-functors: f ≤ g iff k ≤ b(f x, g x) for every x.
bool functor_le(const VCatObj& cod, const Map& f, const Map& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!cod.below(f[i], g[i])) return false;
  }
  return true;
}

bool equivalent_points(const VCatObj& x, std::size_t a, std::size_t b) {
  return x.below(a, b) && x.below(b, a);
}

}  // namespace

SweepConfig SweepConfig::from_env() {
  SweepConfig c;
  if (const char* env = std::getenv("EQUILOG_MAX_CARRIER")) {
    try {
      auto v = std::stoul(env);
      if (v == 0) throw InputError("EQUILOG_MAX_CARRIER must be at least 1");
      c.max_carrier = v;
    } catch (const std::logic_error&) {
      throw InputError("EQUILOG_MAX_CARRIER must be a positive integer");
    }
  }
  return c;
}

std::vector<Value> SweepConfig::values(const Quantale& q) const {
  if (q.is_finite()) return q.carrier();
  return grid.empty() ? q.default_grid() : grid;
}

Deadline::Deadline(std::chrono::seconds budget) : end_(std::chrono::steady_clock::now() + budget) {}

void Deadline::check() const {
  if (std::chrono::steady_clock::now() > end_) throw BoundExceeded("sweep time budget exhausted");
}

std::vector<ClassRep> enumerate_morphclasses(const EquObj& x, const EquObj& y) {
  return enumerate_classes(x, y);
}

std::vector<ClassRep> enumerate_morphclasses(const PEquObj& x, const PEquObj& y) {
  return enumerate_classes(Base(x.base), x.per, Base(y.base), y.per);
}

std::vector<Map> enumerate_morphclasses(const Assembly& x, const Assembly& y) {
  return enumerate_assembly_morphisms(x, y);
}

Verdict verify_universal_property(LimitKind kind, const Cone& candidate,
                                  std::span<const EquObj> objects,
                                  std::span<const MorphClass> arrows,
                                  std::span<const EquObj> competitors) {
  Verdict v;
  v.bound = std::to_string(competitors.size()) + " competitor objects";
  const EquObj& c = candidate.object;
  const auto c_reps = block_representatives(c.equiv);

  auto leg_ok = [&](const EquObj& from, const EquObj& to, const Map& f, const char* what) {
    if (!is_base_morphism(from.base, to.base, f) || !is_equivariant(from.equiv, to.equiv, f)) {
      v.fail(std::string(what) + " is not a morphism");
      return false;
    }
    return true;
  };

  switch (kind) {
    case LimitKind::Product:
      if (!leg_ok(c, objects[0], candidate.legs[0], "first projection") ||
          !leg_ok(c, objects[1], candidate.legs[1], "second projection")) {
        return v;
      }
      break;
    case LimitKind::Coproduct:
      if (!leg_ok(objects[0], c, candidate.legs[0], "first injection") ||
          !leg_ok(objects[1], c, candidate.legs[1], "second injection")) {
        return v;
      }
      break;
    case LimitKind::Equalizer: {
      const auto& x = arrows[0].dom;
      const auto& y = arrows[0].cod;
      if (!leg_ok(c, x, candidate.legs[0], "inclusion")) return v;
      if (!same_class(c.equiv, y.equiv, compose(arrows[0].rep, candidate.legs[0]),
                      compose(arrows[1].rep, candidate.legs[0]))) {
        v.fail("inclusion does not equalize the pair");
        return v;
      }
      break;
    }
    case LimitKind::Coequalizer: {
      const auto& x = arrows[0].dom;
      const auto& y = arrows[0].cod;
      if (!leg_ok(y, c, candidate.legs[0], "quotient")) return v;
      if (!same_class(x.equiv, c.equiv, compose(candidate.legs[0], arrows[0].rep),
                      compose(candidate.legs[0], arrows[1].rep))) {
        v.fail("quotient does not coequalize the pair");
        return v;
      }
      break;
    }
    default:
      break;
  }

  for (const auto& z : competitors) {
    if (!same_category(z.base, c.base)) continue;
    ++v.instances;
    const auto z_reps = block_representatives(z.equiv);
    switch (kind) {
      case LimitKind::Product: {
        const auto& x = objects[0];
        const auto& y = objects[1];
        std::set<std::pair<ClassKey, ClassKey>> image;
        for (const auto& h : enumerate_classes(z, c)) {
          auto kx = class_key(z_reps, x.equiv, compose(candidate.legs[0], h.rep));
          auto ky = class_key(z_reps, y.equiv, compose(candidate.legs[1], h.rep));
          if (!image.insert({kx, ky}).second) {
            v.fail("uniqueness fails for competitor " + describe(z));
            return v;
          }
        }
        if (image.size() != enumerate_classes(z, x).size() * enumerate_classes(z, y).size()) {
          v.fail("existence fails for competitor " + describe(z));
          return v;
        }
        break;
      }
      case LimitKind::Coproduct: {
        const auto& x = objects[0];
        const auto& y = objects[1];
        const auto x_reps = block_representatives(x.equiv);
        const auto y_reps = block_representatives(y.equiv);
        std::set<std::pair<ClassKey, ClassKey>> image;
        for (const auto& h : enumerate_classes(c, z)) {
          auto kx = class_key(x_reps, z.equiv, compose(h.rep, candidate.legs[0]));
          auto ky = class_key(y_reps, z.equiv, compose(h.rep, candidate.legs[1]));
          if (!image.insert({kx, ky}).second) {
            v.fail("uniqueness fails for competitor " + describe(z));
            return v;
          }
        }
        if (image.size() != enumerate_classes(x, z).size() * enumerate_classes(y, z).size()) {
          v.fail("existence fails for competitor " + describe(z));
          return v;
        }
        break;
      }
      case LimitKind::Equalizer: {
        const auto& x = arrows[0].dom;
        const auto& y = arrows[0].cod;
        std::set<ClassKey> cones;
        for (const auto& k : enumerate_classes(z, x)) {
          if (class_key(z_reps, y.equiv, compose(arrows[0].rep, k.rep)) ==
              class_key(z_reps, y.equiv, compose(arrows[1].rep, k.rep))) {
            cones.insert(k.key);
          }
        }
        std::set<ClassKey> image;
        for (const auto& h : enumerate_classes(z, c)) {
          if (!image.insert(class_key(z_reps, x.equiv, compose(candidate.legs[0], h.rep))).second) {
            v.fail("uniqueness fails for competitor " + describe(z));
            return v;
          }
        }
        if (image != cones) {
          v.fail("existence fails for competitor " + describe(z));
          return v;
        }
        break;
      }
      case LimitKind::Coequalizer: {
        const auto& x = arrows[0].dom;
        const auto& y = arrows[0].cod;
        const auto x_reps = block_representatives(x.equiv);
        const auto y_reps = block_representatives(y.equiv);
        std::set<ClassKey> cocones;
        for (const auto& k : enumerate_classes(y, z)) {
          if (class_key(x_reps, z.equiv, compose(k.rep, arrows[0].rep)) ==
              class_key(x_reps, z.equiv, compose(k.rep, arrows[1].rep))) {
            cocones.insert(k.key);
          }
        }
        std::set<ClassKey> image;
        for (const auto& h : enumerate_classes(c, z)) {
          if (!image.insert(class_key(y_reps, z.equiv, compose(h.rep, candidate.legs[0]))).second) {
            v.fail("uniqueness fails for competitor " + describe(z));
            return v;
          }
        }
        if (image != cocones) {
          v.fail("existence fails for competitor " + describe(z));
          return v;
        }
        break;
      }
      case LimitKind::Terminal: {
        auto n = enumerate_classes(z, c).size();
        if (n != 1) {
          v.fail(std::to_string(n) + " classes into the candidate from " + describe(z));
          return v;
        }
        break;
      }
      case LimitKind::Initial: {
        auto n = enumerate_classes(c, z).size();
        if (n != 1) {
          v.fail(std::to_string(n) + " classes from the candidate into " + describe(z));
          return v;
        }
        break;
      }
    }
  }
  return v;
}

MonoEpi cancellation_mono_epi(const MorphClass& f, std::span<const EquObj> competitors) {
  MonoEpi out{true, true};
  for (const auto& z : competitors) {
    if (!same_category(z.base, f.dom.base)) continue;
    if (out.mono) {
      const auto z_reps = block_representatives(z.equiv);
      std::set<ClassKey> seen;
      for (const auto& g : enumerate_classes(z, f.dom)) {
        if (!seen.insert(class_key(z_reps, f.cod.equiv, compose(f.rep, g.rep))).second) {
          out.mono = false;
          break;
        }
      }
    }
    if (out.epi) {
      const auto x_reps = block_representatives(f.dom.equiv);
      std::set<ClassKey> seen;
      for (const auto& h : enumerate_classes(f.cod, z)) {
        if (!seen.insert(class_key(x_reps, z.equiv, compose(h.rep, f.rep))).second) {
          out.epi = false;
          break;
        }
      }
    }
    if (!out.mono && !out.epi) break;
  }
  return out;
}

AdjointPair adjoint_pair(TransferPair pair) {
  switch (pair) {
    case TransferPair::OrdMet: return {pair, Direction::Leftward, Direction::Rightward};
    case TransferPair::OrdTop: return {pair, Direction::Rightward, Direction::Leftward};
    case TransferPair::MetApp: return {pair, Direction::Rightward, Direction::Leftward};
    case TransferPair::TopApp: return {pair, Direction::Leftward, Direction::Rightward};
  }
  throw InputError("unknown transfer pair");
}

Verdict verify_adjunction(TransferPair pair, std::span<const EquObj> c_objects,
                          std::span<const EquObj> d_objects, bool flipped) {
  const auto ap = adjoint_pair(pair);
  const Direction f_dir = flipped ? ap.right : ap.left;  // the functor tried as left adjoint
  const Direction g_dir = flipped ? ap.left : ap.right;
  auto a_side = flipped ? d_objects : c_objects;
  auto b_side = flipped ? c_objects : d_objects;
  Verdict v;
  v.bound = std::to_string(a_side.size()) + " x " + std::to_string(b_side.size()) + " objects";

  std::vector<EquObj> fa, gb;
  for (const auto& a : a_side) fa.push_back(adjunction_transfer(a, pair, f_dir));
  for (const auto& b : b_side) gb.push_back(adjunction_transfer(b, pair, g_dir));

  for (std::size_t i = 0; i < a_side.size(); ++i) {
    auto gfa = adjunction_transfer(fa[i], pair, g_dir);
    if (!is_base_morphism(a_side[i].base, gfa.base, identity_map(base_size(gfa.base)))) {
      v.fail("unit is not a morphism at " + describe(a_side[i]));
      return v;
    }
  }
  for (std::size_t j = 0; j < b_side.size(); ++j) {
    auto fgb = adjunction_transfer(gb[j], pair, f_dir);
    if (!is_base_morphism(fgb.base, b_side[j].base, identity_map(base_size(fgb.base)))) {
      v.fail("counit is not a morphism at " + describe(b_side[j]));
      return v;
    }
  }
  for (std::size_t i = 0; i < a_side.size(); ++i) {
    for (std::size_t j = 0; j < b_side.size(); ++j) {
      ++v.instances;
      auto left = all_morphisms(fa[i], b_side[j]);
      auto right = all_morphisms(a_side[i], gb[j]);
      if (left != right) {
        std::vector<Map> diff;
        std::set_symmetric_difference(left.begin(), left.end(), right.begin(), right.end(),
                                      std::back_inserter(diff));
        bool only_left = left.count(diff.front()) > 0;
        v.fail("hom mismatch: map " + describe_map(diff.front()) + " is a morphism only " +
               (only_left ? "F a → b" : "a → G b") + " for a = " + describe(a_side[i]) +
               "; b = " + describe(b_side[j]) + " (" + std::to_string(left.size()) + " vs " +
               std::to_string(right.size()) + " morphisms)");
        return v;
      }
    }
  }
  return v;
}

Verdict injectivity_test(const VCatObj& z, const SweepConfig& sweep) {
  Verdict v;
  const auto& q = z.quantale();
  v.bound = "test objects with at most " + std::to_string(sweep.max_carrier) + " points";
  Deadline deadline(sweep.time_budget);
  auto equivalent_to = [&](std::size_t target) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < z.size(); ++w) {
      if (equivalent_points(z, w, target)) out.push_back(w);
    }
    return out;
  };
  const Base zb(z);

  if (q.is_finite()) {
    auto yoneda = presheaf_embed(z);
    std::vector<std::vector<std::size_t>> candidates(yoneda.cod.size());
    for (std::size_t p = 0; p < yoneda.cod.size(); ++p) candidates[p] = identity_map(z.size());
    for (std::size_t x = 0; x < z.size(); ++x) {
      auto& c = candidates[yoneda.map[x]];
      auto eq = equivalent_to(x);
      std::vector<std::size_t> both;
      std::set_intersection(c.begin(), c.end(), eq.begin(), eq.end(), std::back_inserter(both));
      c = both;
    }
    bool found = !for_each_base_morphism(Base(yoneda.cod), zb, candidates,
                                          [](const Map&, std::size_t) { return true; },
                                          [](const Map&) { return false; });
    ++v.instances;
    if (!found) {
      v.fail("the identity does not extend along the presheaf embedding into " +
             describe(Base(yoneda.cod)));
      return v;
    }
  }

  const auto values = sweep.values(q);
  for (const auto& y : structures_up_to(q, sweep.max_carrier, values, true)) {
    const Base yb(y);
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << y.size()); ++mask) {
      deadline.check();
      std::vector<std::size_t> points;
      for (std::size_t i = 0; i < y.size(); ++i) {
        if ((mask >> i) & 1u) points.push_back(i);
      }
      VCatObj sub = vcat_subobject(y, points);
      for (const auto& f : enumerate_vfunctors(sub, z)) {
        ++v.instances;
        std::vector<std::vector<std::size_t>> candidates(y.size(), identity_map(z.size()));
        for (std::size_t k = 0; k < points.size(); ++k) candidates[points[k]] = equivalent_to(f[k]);
        bool extended = !for_each_base_morphism(yb, zb, candidates,
                                                 [](const Map&, std::size_t) { return true; },
                                                 [](const Map&) { return false; });
        if (!extended) {
          std::string names;
          for (auto p : points) names += (names.empty() ? "" : ",") + y.carrier()[p];
          v.fail("map " + map_name(z, f) + " on {" + names + "} has no extension to " + describe(yb));
          return v;
        }
      }
    }
    // the empty subspace: some morphism y → z must exist
    if (y.size() > 0) {
      ++v.instances;
      if (enumerate_vfunctors(y, z).empty()) {
        v.fail("no morphism from " + describe(yb) + " extends the empty map");
        return v;
      }
    }
  }
  return v;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotApplicable: return "N/A";
  }
  return "?";
}

std::optional<Map> find_vcat_isomorphism(const VCatObj& a, const VCatObj& b) {
  if (a.size() != b.size() || !(a.quantale() == b.quantale())) return std::nullopt;
  std::optional<Map> found;
  search_maps(
      all_candidates(a.size(), b.size()),
      [&](const Map& f, std::size_t i) {
        for (std::size_t j = 0; j <= i; ++j) {
          if (j < i && f[j] == f[i]) return false;
          if (!(a(i, j) == b(f[i], f[j])) || !(a(j, i) == b(f[j], f[i]))) return false;
        }
        return true;
      },
      [&](const Map& f) {
        found = f;
        return false;
      });
  return found;
}

bool separation_preserves_product(const VCatObj& x, const VCatObj& y) {
  auto sx = separated_reflection(x);
  auto sy = separated_reflection(y);
  auto prod = vcat_product(x, y);
  auto sp = separated_reflection(prod.object);
  auto target = vcat_product(sx.cod, sy.cod).object;
  const auto m = sy.cod.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  Map comparison(sp.cod.size(), unset);
  for (std::size_t p = 0; p < prod.object.size(); ++p) {
    auto image = sx.map[prod.first[p]] * m + sy.map[prod.second[p]];
    auto& slot = comparison[sp.map[p]];
    if (slot != unset && slot != image) return false;
    slot = image;
  }
  if (comparison.size() != target.size()) return false;
  Map inverse(target.size(), unset);
  for (std::size_t i = 0; i < comparison.size(); ++i) {
    if (inverse[comparison[i]] != unset) return false;
    inverse[comparison[i]] = i;
  }
  return is_vfunctor(sp.cod, target, comparison) && is_vfunctor(target, sp.cod, inverse);
}

std::vector<ConditionResult> condition_suite(const Quantale& q, const SweepConfig& sweep) {
  Deadline deadline(sweep.time_budget);
  const bool finite = q.is_finite();
  // real-valued quantales are swept at carrier ≤ 2
  const std::size_t bound = finite ? sweep.max_carrier : std::min<std::size_t>(sweep.max_carrier, 2);
  const auto values = sweep.values(q);
  const auto universe = structures_up_to(q, bound, values, true);
  const auto small = structures_up_to(q, std::min<std::size_t>(bound, 2), values, true);
  const std::string at_bound = " at carrier ≤ " + std::to_string(bound) + " (" +
                               std::to_string(universe.size()) + " objects)";
  std::vector<ConditionResult> out;

  {  // (a)
    ConditionResult r{"(a) preorder-enriched", Status::Pass, ""};
    for (const auto& x : universe) {
      for (const auto& y : universe) {
        deadline.check();
        auto homs = enumerate_vfunctors(x, y);
        for (const auto& f : homs) {
          if (!functor_le(y, f, f)) r = {r.name, Status::Fail, "≤ is not reflexive"};
          for (const auto& g : homs) {
            if (!functor_le(y, f, g)) continue;
            for (const auto& h : homs) {
              if (functor_le(y, g, h) && !functor_le(y, f, h)) {
                r = {r.name, Status::Fail, "≤ is not transitive"};
              }
            }
            for (const auto& zo : small) {
              for (const auto& k : enumerate_vfunctors(y, zo)) {
                if (!functor_le(zo, compose(k, f), compose(k, g))) {
                  r = {r.name, Status::Fail, "postcomposition does not preserve ≤"};
                }
              }
              for (const auto& k : enumerate_vfunctors(zo, x)) {
                if (!functor_le(y, compose(f, k), compose(g, k))) {
                  r = {r.name, Status::Fail, "precomposition does not preserve ≤"};
                }
              }
            }
          }
        }
        if (r.status == Status::Fail) break;
      }
      if (r.status == Status::Fail) break;
      // separated in the hom-set sense agrees with antisymmetry of the point order
      bool hom_separated = true;
      for (const auto& y : small) {
        auto homs = enumerate_vfunctors(y, x);
        for (const auto& f : homs) {
          for (const auto& g : homs) {
            if (f != g && functor_le(x, f, g) && functor_le(x, g, f)) hom_separated = false;
          }
        }
      }
      if (hom_separated != is_separated(x)) {
        r = {r.name, Status::Fail, "separation disagrees with antisymmetry for " + describe(Base(x))};
        break;
      }
    }
    if (r.status == Status::Pass) r.detail = "composition-compatible preorder on hom-sets" + at_bound;
    out.push_back(r);
  }

  {  // (b)
    ConditionResult r{"(b) initial morphisms reflect the order", Status::Pass, ""};
    for (const auto& x : universe) {
      for (const auto& y : universe) {
        deadline.check();
        for (const auto& f : enumerate_vfunctors(x, y)) {
          if (!is_initial(x, y, f)) continue;
          for (std::size_t a = 0; a < x.size(); ++a) {
            for (std::size_t b = 0; b < x.size(); ++b) {
              if (equivalent_points(y, f[a], f[b]) && !equivalent_points(x, a, b)) {
                r = {r.name, Status::Fail, "initial " + map_name(y, f) + " identifies " +
                                               x.carrier()[a] + " and " + x.carrier()[b]};
              }
            }
          }
        }
      }
    }
    if (r.status == Status::Pass) r.detail = "all initial morphisms" + at_bound;
    out.push_back(r);
  }

  std::vector<VCatObj> injectives;
  {  // (c)
    ConditionResult r{"(c) enough injectives", Status::Pass, ""};
    if (!finite) {
      r = {r.name, Status::NotApplicable, "presheaf objects over " + q.name() + " are infinite"};
    } else {
      std::vector<VCatObj> checked;
      for (const auto& x : universe) {
        deadline.check();
        auto yoneda = presheaf_embed(x);
        if (!is_initial(x, yoneda.cod, yoneda.map)) {
          r = {r.name, Status::Fail, "embedding is not initial for " + describe(Base(x))};
          break;
        }
        if (is_separated(x) && !is_separated(yoneda.cod)) {
          r = {r.name, Status::Fail, "presheaf object of separated " + describe(Base(x)) +
                                         " is not separated"};
          break;
        }
        if (std::any_of(checked.begin(), checked.end(),
                        [&](const VCatObj& c) { return find_vcat_isomorphism(c, yoneda.cod).has_value(); })) {
          continue;
        }
        checked.push_back(yoneda.cod);
        auto verdict = injectivity_test(yoneda.cod, sweep);
        if (!verdict.passed) {
          r = {r.name, Status::Fail, "presheaf object not injective: " + verdict.certificate};
          break;
        }
      }
      if (r.status == Status::Pass) {
        r.detail = "embeddings initial, " + std::to_string(checked.size()) +
                   " presheaf objects injective" + at_bound;
      }
      for (const auto& x : universe) {
        if (injectivity_test(x, sweep).passed) injectives.push_back(x);
      }
    }
    out.push_back(r);
  }

  {  // (d)
    ConditionResult r{"(d) injectives are exponentiable", Status::Pass, ""};
    auto grid = q.default_grid();
    if (!check_exp_condition(q, grid)) {
      r = {r.name, Status::Fail, "exponentiability identity fails on the probe grid"};
    } else if (!finite) {
      r.detail = "identity holds on the default grid; exponential oracle needs a finite quantale";
    } else {
      std::size_t built = 0;
      for (const auto& zx : injectives) {
        for (const auto& y : universe) {
          deadline.check();
          try {
            vcat_exponential(zx, y);
            ++built;
          } catch (const ConstructionRejected& e) {
            r = {r.name, Status::Fail, describe(Base(zx)) + ": " + e.what()};
            break;
          }
        }
        if (r.status == Status::Fail) break;
      }
      if (r.status == Status::Pass) {
        r.detail = "identity holds; " + std::to_string(built) + " exponentials from " +
                   std::to_string(injectives.size()) + " injectives passed the transpose audit" +
                   at_bound;
      }
    }
    out.push_back(r);
  }

  {  // (e)
    ConditionResult r{"(e) separated reflection preserves finite products", Status::Pass, ""};
    for (const auto& x : universe) {
      for (const auto& y : universe) {
        deadline.check();
        if (!separation_preserves_product(x, y)) {
          r = {r.name, Status::Fail, describe(Base(x)) + " and " + describe(Base(y))};
          break;
        }
      }
      if (r.status == Status::Fail) break;
    }
    if (r.status == Status::Pass) r.detail = "binary products" + at_bound;
    out.push_back(r);
  }

  {  // (f)
    ConditionResult r{"(f) extensive", Status::Pass, ""};
    for (const auto& x : small) {
      for (const auto& y : small) {
        auto co = vcat_coproduct(x, y);
        if (!is_initial(x, co.object, co.first) || !is_initial(y, co.object, co.second)) {
          r = {r.name, Status::Fail, "coproduct injections are not initial"};
        }
        for (auto a : co.first) {
          for (auto b : co.second) {
            if (a == b) r = {r.name, Status::Fail, "coproduct injections overlap"};
          }
        }
        for (const auto& z : universe) {
          deadline.check();
          for (const auto& h : enumerate_vfunctors(z, co.object)) {
            for (std::size_t a = 0; a < z.size(); ++a) {
              for (std::size_t b = 0; b < z.size(); ++b) {
                bool split = (h[a] < x.size()) != (h[b] < x.size());
                if (split && !(z(a, b) == q.bottom())) {
                  r = {r.name, Status::Fail, "pullback along " + map_name(co.object, h) +
                                                 " is not a coproduct in " + describe(Base(z))};
                }
              }
            }
          }
        }
      }
    }
    if (r.status == Status::Pass) {
      r.detail = "binary coproducts disjoint and universal for summands ≤ 2 points, test objects" +
                 at_bound;
    }
    out.push_back(r);
  }
  return out;
}

Verdict verify_pequ_exponential(const PEquObj& x, const PEquObj& y, const PEquExponential& e,
                                std::span<const PEquObj> competitors) {
  Verdict v;
  v.bound = std::to_string(competitors.size()) + " competitor objects";
  auto ex = pequ_product(e.object, x);
  if (!is_vfunctor(ex.base, y.base, e.evaluation) || !is_equivariant(ex.per, y.per, e.evaluation)) {
    v.fail("evaluation is not a morphism");
    return v;
  }
  const auto n = x.base.size();
  for (const auto& z : competitors) {
    ++v.instances;
    auto zx = pequ_product(z, x);
    const auto zx_reps = block_representatives(zx.per);
    std::set<ClassKey> direct;
    for (const auto& h : enumerate_morphclasses(zx, y)) direct.insert(h.key);
    std::set<ClassKey> image;
    for (const auto& h : enumerate_morphclasses(z, e.object)) {
      Map k(zx.base.size());
      for (std::size_t zi = 0; zi < z.base.size(); ++zi) {
        for (std::size_t xi = 0; xi < n; ++xi) k[zi * n + xi] = e.evaluation[h.rep[zi] * n + xi];
      }
      if (!image.insert(class_key(zx_reps, y.per, k)).second) {
        v.fail("uniqueness fails for competitor on " + std::to_string(z.base.size()) + " points");
        return v;
      }
    }
    if (image != direct) {
      v.fail("existence fails for competitor on " + std::to_string(z.base.size()) + " points (" +
             std::to_string(direct.size()) + " classes z×x→y, " + std::to_string(image.size()) +
             " transposes)");
      return v;
    }
  }
  return v;
}

Verdict verify_assm_exponential(const Assembly& x, const Assembly& y, const AssmExponential& e,
                                std::span<const Assembly> competitors) {
  Verdict v;
  v.bound = std::to_string(competitors.size()) + " competitor assemblies";
  auto cx = assm_product(e.object, x);
  if (!track_check(e.evaluation, cx, y)) {
    v.fail("evaluation is not tracked");
    return v;
  }
  const auto n = x.size();
  for (const auto& z : competitors) {
    ++v.instances;
    auto zx = assm_product(z, x);
    auto direct = enumerate_assembly_morphisms(zx, y);
    std::set<Map> direct_set(direct.begin(), direct.end());
    std::set<Map> image;
    for (const auto& k : enumerate_assembly_morphisms(z, e.object)) {
      Map h(zx.size());
      for (std::size_t zi = 0; zi < z.size(); ++zi) {
        for (std::size_t a = 0; a < n; ++a) h[zi * n + a] = e.functions[k[zi]][a];
      }
      if (!image.insert(h).second) {
        v.fail("uniqueness fails for a competitor with " + std::to_string(z.size()) + " elements");
        return v;
      }
    }
    if (image != direct_set) {
      v.fail("existence fails for a competitor with " + std::to_string(z.size()) + " elements");
      return v;
    }
  }
  return v;
}

Verdict verify_modest_reflection(const Assembly& a, const ModestReflection& r,
                                 std::span<const Assembly> modest_competitors) {
  Verdict v;
  v.bound = std::to_string(modest_competitors.size()) + " modest competitors";
  if (!is_modest(r.object)) {
    v.fail("reflection is not modest");
    return v;
  }
  if (!track_check(r.unit, a, r.object)) {
    v.fail("unit is not tracked");
    return v;
  }
  for (const auto& m : modest_competitors) {
    ++v.instances;
    auto direct = enumerate_assembly_morphisms(a, m);
    std::set<Map> direct_set(direct.begin(), direct.end());
    std::set<Map> image;
    for (const auto& k : enumerate_assembly_morphisms(r.object, m)) {
      if (!image.insert(compose(k, r.unit)).second) {
        v.fail("uniqueness fails for a modest competitor with " + std::to_string(m.size()) +
               " elements");
        return v;
      }
    }
    if (image != direct_set) {
      v.fail("a morphism into a modest competitor with " + std::to_string(m.size()) +
             " elements does not factor");
      return v;
    }
  }
  return v;
}

Verdict verify_R_full_faithful(const PEquObj& p, const PEquObj& q) {
  Verdict v;
  ++v.instances;
  auto rp = functor_R(p);
  auto rq = functor_R(q);
  const auto reps = block_representatives(rp.equiv);
  std::set<ClassKey> image;
  for (const auto& h : enumerate_morphclasses(p, q)) {
    if (!image.insert(class_key(reps, rq.equiv, functor_R_morphism(p, q, h.rep))).second) {
      v.fail("R is not faithful: two classes have the same image");
      return v;
    }
  }
  std::set<ClassKey> target;
  for (const auto& h : enumerate_classes(rp, rq)) target.insert(h.key);
  if (image != target) {
    v.fail("R is not full: " + std::to_string(target.size()) + " classes R p → R q, " +
           std::to_string(image.size()) + " in the image");
  }
  return v;
}

Verdict verify_reflectivity(const PseudoEqRel& p, const PseudoEqRel& target) {
  Verdict v;
  ++v.instances;
  auto reflected = reflect_to_equ(p);
  auto e = per_to_equ(target);
  const auto reps = block_representatives(reflected.object.equiv);
  std::set<ClassKey> image;
  for (const auto& f0 : span_morphism_classes(p, target)) {
    if (!is_equivariant(reflected.object.equiv, e.equiv, f0)) {
      v.fail("span morphism " + describe_map(f0) + " is not equivariant on the reflection");
      return v;
    }
    if (!image.insert(class_key(reps, e.equiv, compose(f0, reflected.unit))).second) {
      v.fail("distinct span morphism classes merge in the reflection");
      return v;
    }
  }
  auto classes = enumerate_classes(reflected.object, e);
  if (classes.size() != image.size()) {
    v.fail(std::to_string(classes.size()) + " classes out of the reflection but " +
           std::to_string(image.size()) + " span morphism classes");
  }
  return v;
}

}  // namespace equilog
