#include "equilog/document.hpp"

#include "equilog/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace equilog {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

std::vector<std::string> names(const Json& j, const char* what) {
  std::vector<std::string> out;
  for (const auto& n : array(j, what)) out.push_back(text(n, what));
  return out;
}

std::size_t index_in(const std::vector<std::string>& carrier, const std::string& name) {
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (carrier[i] == name) return i;
  }
  throw InputError("unknown point '" + name + "'");
}

Map parse_map(const Json& j, std::size_t dom_size, const std::vector<std::string>& cod,
              const char* what) {
  auto images = names(j, what);
  if (images.size() != dom_size) {
    throw InputError(std::string(what) + " must list " + std::to_string(dom_size) + " images");
  }
  Map out;
  for (const auto& n : images) out.push_back(index_in(cod, n));
  return out;
}

Json print_map(const Map& f, const std::vector<std::string>& cod) {
  Json out = Json::array();
  for (auto i : f) out.push_back(cod.at(i));
  return out;
}

Json print_vcat(const VCatObj& x) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < x.size(); ++j) row.push_back(print_value(x.quantale(), x(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"type", "vcat"},
          {"quantale", x.quantale().name()},
          {"carrier", x.carrier()},
          {"structure", std::move(rows)}};
}

VCatObj parse_vcat(const Json& j) {
  auto q = Quantale::from_name(text(field(j, "quantale"), "quantale"));
  auto carrier = names(field(j, "carrier"), "carrier");
  const auto& rows = array(field(j, "structure"), "structure");
  if (rows.size() != carrier.size()) throw InputError("structure needs one row per point");
  std::vector<Value> entries;
  for (const auto& row : rows) {
    if (array(row, "structure row").size() != carrier.size()) {
      throw InputError("structure rows need one entry per point");
    }
    for (const auto& e : row) entries.push_back(parse_value(q, e));
  }
  return VCatObj(q, std::move(carrier), std::move(entries));
}

Json subset_names(Subset s, const std::vector<std::string>& carrier) {
  Json out = Json::array();
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if ((s >> i) & 1u) out.push_back(carrier[i]);
  }
  return out;
}

Subset parse_subset(const Json& j, const std::vector<std::string>& carrier) {
  Subset s = 0;
  for (const auto& n : names(j, "open set")) s |= Subset{1} << index_in(carrier, n);
  return s;
}

Json print_top(const FinTop& t) {
  Json opens = Json::array();
  for (auto o : t.opens()) opens.push_back(subset_names(o, t.carrier()));
  return {{"type", "top"}, {"carrier", t.carrier()}, {"opens", std::move(opens)}};
}

FinTop parse_top(const Json& j) {
  auto carrier = names(field(j, "carrier"), "carrier");
  if (carrier.size() > kMaxTopologyCarrier) throw InputError("topology carrier too large");
  std::vector<Subset> opens;
  for (const auto& o : array(field(j, "opens"), "opens")) opens.push_back(parse_subset(o, carrier));
  return FinTop(std::move(carrier), std::move(opens));
}

Json print_app(const FinApp& a) {
  const Quantale q(QuantaleKind::PlusReversed);
  Json rows = Json::array();
  for (std::size_t x = 0; x < a.size(); ++x) {
    Json row = Json::array();
    for (Subset s = 0; s < a.subset_count(); ++s) row.push_back(print_value(q, a.distance(x, s)));
    rows.push_back(std::move(row));
  }
  return {{"type", "app"}, {"carrier", a.carrier()}, {"distance", std::move(rows)}};
}

FinApp parse_app(const Json& j) {
  auto carrier = names(field(j, "carrier"), "carrier");
  if (carrier.size() > kMaxApproachCarrier) throw InputError("approach carrier too large");
  const auto count = std::size_t{1} << carrier.size();
  const auto& rows = array(field(j, "distance"), "distance");
  if (rows.size() != carrier.size()) throw InputError("distance needs one row per point");
  const Quantale q(QuantaleKind::PlusReversed);
  std::vector<ExtReal> table;
  for (const auto& row : rows) {
    if (array(row, "distance row").size() != count) {
      throw InputError("distance rows need 2^n entries, one per subset bitmask");
    }
    for (const auto& e : row) table.push_back(std::get<ExtReal>(parse_value(q, e)));
  }
  return FinApp(std::move(carrier), std::move(table));
}

Json print_blocks(const Per& p, const std::vector<std::string>& carrier) {
  Json out = Json::array();
  for (const auto& block : p.blocks()) {
    Json b = Json::array();
    for (auto i : block) b.push_back(carrier[i]);
    out.push_back(std::move(b));
  }
  return out;
}

Json print_pairs(const Per& p, const std::vector<std::string>& carrier) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p.related(i, k)) out.push_back(Json::array({carrier[i], carrier[k]}));
    }
  }
  return out;
}

Json print_equ(const EquObj& e) {
  return {{"type", "equ"},
          {"base", print_base(e.base)},
          {"equivalence", print_blocks(e.equiv, base_carrier(e.base))}};
}

EquObj parse_equ(const Json& j) {
  auto base = parse_base(field(j, "base"));
  const auto& carrier = base_carrier(base);
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& b : array(field(j, "equivalence"), "equivalence")) {
    std::vector<std::size_t> block;
    for (const auto& n : names(b, "block")) block.push_back(index_in(carrier, n));
    blocks.push_back(std::move(block));
  }
  auto n = carrier.size();
  return make_equ(std::move(base), Per::from_blocks(n, blocks));
}

Json print_pequ(const PEquObj& p) {
  return {{"type", "pequ"}, {"base", print_vcat(p.base)}, {"per", print_pairs(p.per, p.base.carrier())}};
}

PEquObj parse_pequ(const Json& j) {
  auto base = parse_vcat(field(j, "base"));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& pr : array(field(j, "per"), "per")) {
    auto both = names(pr, "pair");
    if (both.size() != 2) throw InputError("per entries must be pairs");
    pairs.emplace_back(index_in(base.carrier(), both[0]), index_in(base.carrier(), both[1]));
  }
  auto n = base.size();
  return make_pequ(std::move(base), Per::from_pairs(n, pairs));
}

Json print_assembly(const Assembly& a) {
  Json realizers = Json::array();
  for (const auto& r : a.realizers) realizers.push_back(print_map(r, a.base.carrier()));
  return {{"type", "assembly"},
          {"base", print_vcat(a.base)},
          {"elements", a.elements},
          {"realizers", std::move(realizers)}};
}

Assembly parse_assembly(const Json& j) {
  auto base = parse_vcat(field(j, "base"));
  auto elements = names(field(j, "elements"), "elements");
  const auto& rs = array(field(j, "realizers"), "realizers");
  if (rs.size() != elements.size()) throw InputError("realizers need one list per element");
  std::vector<std::vector<std::size_t>> realizers;
  for (const auto& r : rs) {
    std::vector<std::size_t> set;
    for (const auto& n : names(r, "realizer set")) set.push_back(index_in(base.carrier(), n));
    realizers.push_back(std::move(set));
  }
  return make_assembly(std::move(elements), std::move(base), std::move(realizers));
}

Json print_span(const PseudoEqRel& p) {
  Json out = {{"type", "span"},
              {"x1", print_vcat(p.x1)},
              {"x0", print_vcat(p.x0)},
              {"r1", print_map(p.r1, p.x0.carrier())},
              {"r2", print_map(p.r2, p.x0.carrier())}};
  if (p.r) out["r"] = print_map(*p.r, p.x1.carrier());
  if (p.s) out["s"] = print_map(*p.s, p.x1.carrier());
  if (p.t) out["t"] = print_map(*p.t, p.x1.carrier());
  return out;
}

PseudoEqRel parse_span(const Json& j) {
  PseudoEqRel p{parse_vcat(field(j, "x1")), parse_vcat(field(j, "x0")), {}, {}, {}, {}, {}};
  p.r1 = parse_map(field(j, "r1"), p.x1.size(), p.x0.carrier(), "r1");
  p.r2 = parse_map(field(j, "r2"), p.x1.size(), p.x0.carrier(), "r2");
  if (j.contains("r")) p.r = parse_map(j["r"], p.x0.size(), p.x1.carrier(), "r");
  if (j.contains("s")) p.s = parse_map(j["s"], p.x1.size(), p.x1.carrier(), "s");
  if (j.contains("t")) {
    auto pullback_size = span_pullback(p).pairs.size();
    p.t = parse_map(j["t"], pullback_size, p.x1.carrier(), "t");
  }
  return p;
}

std::size_t object_size(const Object& o) { return object_names(o).size(); }

}  // namespace

Json print_value(const Quantale& q, const Value& v) { return q.format(v); }

Value parse_value(const Quantale& q, const Json& j) {
  if (j.is_string()) return q.parse(j.get<std::string>());
  if (j.is_boolean() && q.kind() == QuantaleKind::Two) return j.get<bool>();
  if (j.is_number_unsigned() || j.is_number_integer()) return q.parse(std::to_string(j.get<std::int64_t>()));
  throw InputError("structure entries are strings such as \"1/2\", \"inf\", \"top\" or \"u\"");
}

Json print_base(const Base& b) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VCatObj>) return print_vcat(x);
        else if constexpr (std::is_same_v<T, FinTop>) return print_top(x);
        else return print_app(x);
      },
      b);
}

Base parse_base(const Json& j) {
  auto type = text(field(j, "type"), "type");
  if (type == "vcat") return parse_vcat(j);
  if (type == "top") return parse_top(j);
  if (type == "app") return parse_app(j);
  throw InputError("a base must be a vcat, top or app document, not '" + type + "'");
}

Object parse_object(const Json& j) {
  auto d = parse(j);
  return std::visit(
      [](auto&& x) -> Object {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Quantale> || std::is_same_v<T, PseudoEqRel> ||
                      std::is_same_v<T, Morphism>) {
          throw InputError("morphism endpoints must be objects");
        } else {
          return std::move(x);
        }
      },
      std::move(d));
}

Json print_object(const Object& o) {
  return std::visit([](const auto& x) { return print(Document(x)); }, o);
}

const std::vector<std::string>& object_names(const Object& o) {
  return std::visit(
      [](const auto& x) -> const std::vector<std::string>& {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, EquObj>) return base_carrier(x.base);
        else if constexpr (std::is_same_v<T, PEquObj>) return x.base.carrier();
        else if constexpr (std::is_same_v<T, Assembly>) return x.elements;
        else return x.carrier();
      },
      o);
}

std::string document_type(const Document& d) {
  static const char* const tags[] = {"quantale", "vcat", "top",  "app",     "equ",
                                     "pequ",     "assembly", "span", "morphism"};
  return tags[d.index()];
}

Json print(const Document& d) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Quantale>) return {{"type", "quantale"}, {"name", x.name()}};
        else if constexpr (std::is_same_v<T, VCatObj>) return print_vcat(x);
        else if constexpr (std::is_same_v<T, FinTop>) return print_top(x);
        else if constexpr (std::is_same_v<T, FinApp>) return print_app(x);
        else if constexpr (std::is_same_v<T, EquObj>) return print_equ(x);
        else if constexpr (std::is_same_v<T, PEquObj>) return print_pequ(x);
        else if constexpr (std::is_same_v<T, Assembly>) return print_assembly(x);
        else if constexpr (std::is_same_v<T, PseudoEqRel>) return print_span(x);
        else {
          return {{"type", "morphism"},
                  {"dom", print_object(x.dom)},
                  {"cod", print_object(x.cod)},
                  {"map", print_map(x.map, object_names(x.cod))}};
        }
      },
      d);
}

Document parse(const Json& j) {
  auto type = text(field(j, "type"), "type");
  if (type == "quantale") return Quantale::from_name(text(field(j, "name"), "name"));
  if (type == "vcat") return parse_vcat(j);
  if (type == "top") return parse_top(j);
  if (type == "app") return parse_app(j);
  if (type == "equ") return parse_equ(j);
  if (type == "pequ") return parse_pequ(j);
  if (type == "assembly") return parse_assembly(j);
  if (type == "span") return parse_span(j);
  if (type == "morphism") {
    auto dom = parse_object(field(j, "dom"));
    auto cod = parse_object(field(j, "cod"));
    auto map = parse_map(field(j, "map"), object_size(dom), object_names(cod), "map");
    return Morphism{std::move(dom), std::move(cod), std::move(map)};
  }
  throw InputError("unknown document type '" + type + "'");
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse(j);
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace equilog
