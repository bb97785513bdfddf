#include "equilog/pequ.hpp"

#include "equilog/errors.hpp"

namespace equilog {

PEquObj make_pequ(VCatObj base, Per per) {
  if (per.size() != base.size()) {
    throw InputError("partial equivalence covers " + std::to_string(per.size()) +
                     " points but the carrier has " + std::to_string(base.size()));
  }
  return PEquObj{std::move(base), std::move(per)};
}

Report verify_pequ(const PEquObj& p) {
  Report r = verify_vcat(p.base);
  r.add("per-size", p.per.size() == p.base.size(),
        p.per.size() == p.base.size() ? "" : "relation size differs from carrier");
  return r;
}

EquObj functor_R(const PEquObj& p, std::vector<std::size_t>* inclusion) {
  auto points = p.per.domain();
  std::vector<int> labels;
  for (auto x : points) labels.push_back(p.per.label(x));
  if (inclusion) *inclusion = points;
  return make_equ(vcat_subobject(p.base, points), Per(std::move(labels)));
}

Map functor_R_morphism(const PEquObj& p, const PEquObj& q, const Map& f) {
  if (!is_equivariant(p.per, q.per, f)) throw InputError("map is not equivariant");
  std::vector<std::size_t> position(q.per.size(), 0);
  std::size_t k = 0;
  for (auto y : q.per.domain()) position[y] = k++;
  Map out;
  for (auto x : p.per.domain()) out.push_back(position[f[x]]);
  return out;
}

PEquObj hat_pequ(const EquObj& e, Map* embedding) {
  const auto* base = std::get_if<VCatObj>(&e.base);
  if (!base || !base->quantale().is_finite()) {
    throw InputError("hat construction needs a base over a finite quantale");
  }
  if (!is_separated(*base)) throw InputError("hat construction needs a separated base");
  auto yoneda = presheaf_embed(*base);
  std::vector<int> labels(yoneda.cod.size(), -1);
  for (std::size_t x = 0; x < base->size(); ++x) labels[yoneda.map[x]] = e.equiv.label(x);
  if (embedding) *embedding = yoneda.map;
  return make_pequ(std::move(yoneda.cod), Per(std::move(labels)));
}

PEquObj pequ_product(const PEquObj& x, const PEquObj& y) {
  auto cone = vcat_product(x.base, y.base);
  const auto m = y.base.size();
  const int blocks_y = static_cast<int>(y.per.block_count());
  std::vector<int> labels(x.base.size() * m, -1);
  for (std::size_t i = 0; i < x.base.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (x.per.defined(i) && y.per.defined(j)) {
        labels[i * m + j] = x.per.label(i) * blocks_y + y.per.label(j);
      }
    }
  }
  return make_pequ(std::move(cone.object), Per(std::move(labels)));
}

PEquExponential pequ_exponential(const PEquObj& x, const PEquObj& y, ExponentialOptions opts) {
  auto exp = vcat_exponential(x.base, y.base, opts);
  const auto& functors = exp.points;
  const auto n = functors.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (same_class(x.per, y.per, functors[a], functors[b])) pairs.emplace_back(a, b);
    }
  }
  PEquObj object = make_pequ(exp.object, Per::from_pairs(n, pairs));
  Map evaluation = exp.evaluation.map;
  return PEquExponential{std::move(object), std::move(exp), std::move(evaluation)};
}

}  // namespace equilog
