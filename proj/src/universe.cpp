#include "equilog/universe.hpp"

#include "equilog/errors.hpp"
#include "equilog/search.hpp"

#include <algorithm>
#include <set>

namespace equilog {

namespace {

void push_value(std::vector<std::int64_t>& code, const Value& v) {
  if (auto b = std::get_if<bool>(&v)) {
    code.push_back(*b ? 1 : 0);
  } else if (auto d = std::get_if<DiamondValue>(&v)) {
    code.push_back((d->left ? 2 : 0) + (d->right ? 1 : 0));
  } else {
    const auto& r = std::get<ExtReal>(v);
    code.push_back(r.is_infinite() ? 1 : 0);
    code.push_back(r.finite().numerator());
    code.push_back(r.finite().denominator());
  }
}

}  // namespace

std::vector<std::int64_t> canonical_code(const VCatObj& x, const Per& p) {
  const auto n = x.size();
  std::vector<std::int64_t> best;
  for (const auto& perm : permutations(n)) {
    // perm[i] is the new position of point i
    std::vector<std::size_t> at(n);
    for (std::size_t i = 0; i < n; ++i) at[perm[i]] = i;
    std::vector<std::int64_t> code;
    code.reserve(3 * n * n + n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) push_value(code, x(at[i], at[j]));
    }
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = p.label(at[i]);
    const Per normal_per(labels);
    const auto& normal = normal_per.labels();
    code.insert(code.end(), normal.begin(), normal.end());
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<VCatObj> structures(const Quantale& q, std::size_t n, std::span<const Value> values,
                                bool iso_reduced) {
  auto all = enumerate_structures(q, n, values);
  if (!iso_reduced) return all;
  std::set<std::vector<std::int64_t>> seen;
  std::vector<VCatObj> out;
  const Per none = Per::empty(n);
  for (auto& x : all) {
    if (seen.insert(canonical_code(x, none)).second) out.push_back(std::move(x));
  }
  return out;
}

std::vector<VCatObj> structures_up_to(const Quantale& q, std::size_t max_n,
                                      std::span<const Value> values, bool iso_reduced) {
  std::vector<VCatObj> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto part = structures(q, n, values, iso_reduced);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Per> partitions(std::size_t n) {
  std::vector<Per> out;
  for (auto& labels : set_partitions(n)) out.emplace_back(std::move(labels));
  return out;
}

std::vector<Per> partial_partitions(std::size_t n) {
  std::vector<Per> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> domain;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) domain.push_back(i);
    }
    for (const auto& labels : set_partitions(domain.size())) {
      std::vector<int> full(n, -1);
      for (std::size_t k = 0; k < domain.size(); ++k) full[domain[k]] = labels[k];
      out.emplace_back(std::move(full));
    }
  }
  return out;
}

std::vector<EquObj> equ_objects(std::span<const VCatObj> bases, bool iso_reduced) {
  std::vector<EquObj> out;
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& b : bases) {
    for (auto& p : partitions(b.size())) {
      if (iso_reduced && !seen.insert(canonical_code(b, p)).second) continue;
      out.push_back(make_equ(b, std::move(p)));
    }
  }
  return out;
}

std::vector<EquObj> equ_objects(std::span<const FinTop> bases) {
  std::vector<EquObj> out;
  for (const auto& b : bases) {
    for (auto& p : partitions(b.size())) out.push_back(make_equ(b, std::move(p)));
  }
  return out;
}

std::vector<EquObj> equ_objects(std::span<const FinApp> bases) {
  std::vector<EquObj> out;
  for (const auto& b : bases) {
    for (auto& p : partitions(b.size())) out.push_back(make_equ(b, std::move(p)));
  }
  return out;
}

std::vector<EquObj> ord_equ_universe(std::size_t max_n, bool iso_reduced) {
  const Quantale two(QuantaleKind::Two);
  auto values = two.carrier();
  auto bases = structures_up_to(two, max_n, values, iso_reduced);
  return equ_objects(bases, iso_reduced);
}

std::vector<Value> occurring_values(const Base& b) {
  std::vector<Value> out;
  if (const auto* x = std::get_if<VCatObj>(&b)) {
    if (!x->quantale().is_finite()) out = x->entries();
  } else if (const auto* a = std::get_if<FinApp>(&b)) {
    for (const auto& d : a->table()) out.emplace_back(d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EquObj> competitor_universe(const Base& like, std::size_t max_n,
                                        std::span<const Value> extra) {
  auto real_values = [&](const Quantale& q) {
    auto values = q.default_grid();
    values.insert(values.end(), extra.begin(), extra.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  };
  if (const auto* x = std::get_if<VCatObj>(&like)) {
    const auto& q = x->quantale();
    if (q.is_finite()) {
      auto values = q.carrier();
      return equ_objects(structures_up_to(q, max_n, values, true), true);
    }
    auto values = real_values(q);
    return equ_objects(structures_up_to(q, std::min<std::size_t>(max_n, 2), values, true), true);
  }
  if (std::holds_alternative<FinTop>(like)) {
    std::vector<FinTop> spaces;
    for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 3); ++n) {
      auto part = enumerate_topologies(n);
      spaces.insert(spaces.end(), part.begin(), part.end());
    }
    return equ_objects(spaces);
  }
  const Quantale met(QuantaleKind::PlusReversed);
  auto values = real_values(met);
  std::vector<FinApp> spaces;
  for (const auto& m : structures_up_to(met, std::min<std::size_t>(max_n, 2), values, true)) {
    spaces.push_back(met_to_app(m));
  }
  return equ_objects(spaces);
}

std::vector<PEquObj> pequ_objects(std::span<const VCatObj> bases, bool iso_reduced) {
  std::vector<PEquObj> out;
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& b : bases) {
    for (auto& p : partial_partitions(b.size())) {
      if (iso_reduced && !seen.insert(canonical_code(b, p)).second) continue;
      out.push_back(make_pequ(b, std::move(p)));
    }
  }
  return out;
}

std::vector<Assembly> assemblies(std::span<const VCatObj> bases, std::size_t max_elements,
                                 bool modest_only) {
  std::vector<Assembly> out;
  for (const auto& base : bases) {
    const auto w = base.size();
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
          elements.push_back("a" + std::to_string(i));
          e.push_back(subsets[choice[i]]);
        }
        Assembly a{std::move(elements), base, std::move(e)};
        if (!modest_only || is_modest(a)) out.push_back(std::move(a));
        std::size_t k = 0;
        while (k < n && ++choice[k] == subsets.size()) choice[k++] = 0;
        if (k == n) break;
      }
    }
  }
  return out;
}

VCatObj random_structure(Rng& rng, const Quantale& q, std::size_t n, std::span<const Value> values) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  VCatObj raw(q, names);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) raw.set(i, j, values[pick(rng)]);
    }
  }
  Map id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return quotient_closure(raw, id, names);
}

Per random_partition(Rng& rng, std::size_t n) {
  std::vector<int> labels(n);
  std::uniform_int_distribution<int> pick(0, n == 0 ? 0 : static_cast<int>(n) - 1);
  for (auto& l : labels) l = pick(rng);
  return Per(std::move(labels));
}

Per random_partial_partition(Rng& rng, std::size_t n) {
  std::vector<int> labels(n);
  std::uniform_int_distribution<int> pick(-1, static_cast<int>(n) - 1);
  for (auto& l : labels) l = pick(rng);
  return Per(std::move(labels));
}

FinTop random_topology(Rng& rng, std::size_t n) {
  const Quantale two(QuantaleKind::Two);
  auto values = two.carrier();
  return ord_to_top(random_structure(rng, two, n, values));
}

FinApp random_approach(Rng& rng, std::size_t n, std::span<const Value> values) {
  return met_to_app(random_structure(rng, Quantale(QuantaleKind::PlusReversed), n, values));
}

}  // namespace equilog
