#pragma once

#include "equilog/assembly.hpp"
#include "equilog/completion.hpp"
#include "equilog/equ.hpp"
#include "equilog/pequ.hpp"
#include "equilog/quantale.hpp"
#include "equilog/spaces.hpp"
#include "equilog/vcat.hpp"

#include "json.hpp"

#include <string>
#include <variant>

namespace equilog {

using Json = nlohmann::ordered_json;

/// Anything that can be the domain or codomain of a serialized morphism.
using Object = std::variant<VCatObj, FinTop, FinApp, EquObj, PEquObj, Assembly>;

/// A map given by the codomain name of each domain point (or element, for assemblies).
struct Morphism {
  Object dom;
  Object cod;
  Map map;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

using Document = std::variant<Quantale, VCatObj, FinTop, FinApp, EquObj, PEquObj, Assembly,
                              PseudoEqRel, Morphism>;

/// The "type" tag of a document: "quantale", "vcat", "top", "app", "equ", "pequ",
/// "assembly", "span" or "morphism".
std::string document_type(const Document& d);

Json print(const Document& d);
/// Throws InputError on malformed input. Axioms are not checked here.
Document parse(const Json& j);

Json print_value(const Quantale& q, const Value& v);
Value parse_value(const Quantale& q, const Json& j);
Json print_base(const Base& b);
Base parse_base(const Json& j);
Object parse_object(const Json& j);
Json print_object(const Object& o);
/// Names of the points (or elements) a map into this object refers to.
const std::vector<std::string>& object_names(const Object& o);

Document read_document(const std::string& path);
std::string dump(const Json& j);

}  // namespace equilog
