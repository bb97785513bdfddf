#include "equilog/base.hpp"

#include "equilog/errors.hpp"

namespace equilog {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

bool images_in_range(const Map& f, std::size_t dom, std::size_t cod) {
  if (f.size() != dom) return false;
  for (auto v : f) {
    if (v >= cod) return false;
  }
  return true;
}

}  // namespace

const std::vector<std::string>& base_carrier(const Base& b) {
  return std::visit([](const auto& x) -> const std::vector<std::string>& { return x.carrier(); }, b);
}

std::size_t base_size(const Base& b) { return base_carrier(b).size(); }

std::string base_category(const Base& b) {
  return std::visit(overloaded{[](const VCatObj& x) { return x.quantale().name(); },
                               [](const FinTop&) { return std::string("top"); },
                               [](const FinApp&) { return std::string("app"); }},
                    b);
}

bool same_category(const Base& a, const Base& b) { return base_category(a) == base_category(b); }

void require_same_category(const Base& a, const Base& b) {
  if (!same_category(a, b)) {
    throw InputError("objects live in different categories (" + base_category(a) + " vs " +
                     base_category(b) + ")");
  }
}

Report verify_base(const Base& b) {
  return std::visit(overloaded{[](const VCatObj& x) { return verify_vcat(x); },
                               [](const auto& s) { return verify_space(s); }},
                    b);
}

bool is_base_morphism(const Base& dom, const Base& cod, const Map& f) {
  if (!same_category(dom, cod) || !images_in_range(f, base_size(dom), base_size(cod))) return false;
  return std::visit(
      overloaded{[&](const VCatObj& x) { return is_vfunctor(x, std::get<VCatObj>(cod), f); },
                 [&](const FinTop& x) { return is_continuous(x, std::get<FinTop>(cod), f); },
                 [&](const FinApp& x) { return is_contraction(x, std::get<FinApp>(cod), f); }},
      dom);
}

bool is_base_initial(const Base& dom, const Base& cod, const Map& f) {
  if (!is_base_morphism(dom, cod, f)) return false;
  return std::visit(
      overloaded{
          [&](const VCatObj& x) { return is_initial(x, std::get<VCatObj>(cod), f); },
          [&](const FinTop& x) {
            const auto& y = std::get<FinTop>(cod);
            std::vector<Subset> pulled;
            for (auto u : y.opens()) pulled.push_back(preimage(f, u, x.size()));
            return FinTop(x.carrier(), pulled) == x;
          },
          [&](const FinApp& x) {
            const auto& y = std::get<FinApp>(cod);
            for (std::size_t p = 0; p < x.size(); ++p) {
              for (Subset a = 0; a < x.subset_count(); ++a) {
                if (!(x.distance(p, a) == y.distance(f[p], image(f, a)))) return false;
              }
            }
            return true;
          }},
      dom);
}

Base base_product(const Base& x, const Base& y) {
  require_same_category(x, y);
  return std::visit(
      overloaded{[&](const VCatObj& a) -> Base { return vcat_product(a, std::get<VCatObj>(y)).object; },
                 [&](const FinTop& a) -> Base { return top_product(a, std::get<FinTop>(y)); },
                 [&](const FinApp& a) -> Base { return app_product(a, std::get<FinApp>(y)); }},
      x);
}

Base base_coproduct(const Base& x, const Base& y) {
  require_same_category(x, y);
  return std::visit(
      overloaded{
          [&](const VCatObj& a) -> Base { return vcat_coproduct(a, std::get<VCatObj>(y)).object; },
          [&](const FinTop& a) -> Base { return top_coproduct(a, std::get<FinTop>(y)); },
          [&](const FinApp& a) -> Base { return app_coproduct(a, std::get<FinApp>(y)); }},
      x);
}

Base base_subspace(const Base& x, const std::vector<std::size_t>& points) {
  for (auto p : points) {
    if (p >= base_size(x)) throw InputError("subspace point outside carrier");
  }
  return std::visit(overloaded{[&](const VCatObj& a) -> Base { return vcat_subobject(a, points); },
                               [&](const FinTop& a) -> Base { return top_subspace(a, points); },
                               [&](const FinApp& a) -> Base { return app_subspace(a, points); }},
                    x);
}

Base base_terminal(const Base& like) {
  const std::vector<std::string> point{"*"};
  return std::visit(
      overloaded{[&](const VCatObj& a) -> Base { return VCatObj(a.quantale(), point); },
                 [&](const FinTop&) -> Base { return FinTop(point, {0, 1}); },
                 [&](const FinApp&) -> Base {
                   return FinApp(point, {ExtReal::infinity(), ExtReal(0)});
                 }},
      like);
}

Base base_initial(const Base& like) {
  return std::visit(overloaded{[](const VCatObj& a) -> Base { return VCatObj(a.quantale(), {}); },
                               [](const FinTop&) -> Base { return FinTop({}, {0}); },
                               [](const FinApp&) -> Base {
                                 return FinApp({}, {});
                               }},
                    like);
}

PairTable pair_table(const Base& dom, const Base& cod) {
  require_same_category(dom, cod);
  PairTable t;
  t.n = base_size(dom);
  t.m = base_size(cod);
  t.cells.assign(t.n * t.n * t.m * t.m, 0);
  auto fill = [&](auto&& allowed) {
    for (std::size_t i = 0; i < t.n; ++i) {
      for (std::size_t j = 0; j < t.n; ++j) {
        for (std::size_t u = 0; u < t.m; ++u) {
          for (std::size_t v = 0; v < t.m; ++v) {
            t.cells[((i * t.n + j) * t.m + u) * t.m + v] = allowed(i, j, u, v) ? 1 : 0;
          }
        }
      }
    }
  };
  std::visit(overloaded{[&](const VCatObj& a) {
                          const auto& b = std::get<VCatObj>(cod);
                          const auto& q = a.quantale();
                          fill([&](auto i, auto j, auto u, auto v) { return q.leq(a(i, j), b(u, v)); });
                        },
                        [&](const FinTop& a) {
                          // continuous maps preserve the specialization order
                          auto sa = top_to_ord(a);
                          auto sb = top_to_ord(std::get<FinTop>(cod));
                          fill([&](auto i, auto j, auto u, auto v) {
                            return !sa.below(i, j) || sb.below(u, v);
                          });
                          t.exact = false;
                        },
                        [&](const FinApp& a) {
                          // contractions of approach spaces contract point-to-point distances
                          auto& b = std::get<FinApp>(cod);
                          fill([&](auto i, auto j, auto u, auto v) {
                            return b.distance(v, Subset{1} << u) <= a.distance(j, Subset{1} << i);
                          });
                          t.exact = false;
                        }},
             dom);
  return t;
}

}  // namespace equilog
