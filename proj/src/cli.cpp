#include "equilog/cli.hpp"

#include "equilog/document.hpp"
#include "equilog/errors.hpp"
#include "equilog/oracle.hpp"
#include "equilog/universe.hpp"

#include "CLI11.hpp"

#include <functional>
#include <ostream>
#include <sstream>

namespace equilog {

namespace {

struct Outcome {
  int code = kExitOk;
  Json body = Json::object();
  std::string text;
};

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry = {{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return checks;
}

std::string report_text(const Report& r) {
  std::ostringstream s;
  for (const auto& c : r.checks) {
    s << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) s << ": " << c.witness;
    s << "\n";
  }
  return s.str();
}

Outcome from_report(const Report& r) {
  Outcome o;
  o.code = r.passed() ? kExitOk : kExitFailure;
  o.body["passed"] = r.passed();
  o.body["checks"] = report_json(r);
  o.text = report_text(r);
  return o;
}

Outcome from_verdict(const Verdict& v, const std::string& what) {
  Outcome o;
  o.code = v.passed ? kExitOk : kExitFailure;
  o.body = {{"passed", v.passed}, {"bound", v.bound}, {"instances", v.instances}};
  if (!v.passed) o.body["witness"] = v.certificate;
  o.text = (v.passed ? "PASS " : "FAIL ") + what + " (" + std::to_string(v.instances) +
           " instances, at bound: " + v.bound + ")\n";
  if (!v.passed) o.text += "witness: " + v.certificate + "\n";
  return o;
}

Outcome emit(Json body) {
  Outcome o;
  o.text = dump(body) + "\n";
  o.body = std::move(body);
  return o;
}

template <class T>
T expect(const Document& d, const std::string& path) {
  if (const auto* x = std::get_if<T>(&d)) return *x;
  throw InputError(path + ": unexpected document type '" + document_type(d) + "'");
}

template <class T>
T load(const std::string& path) {
  return expect<T>(read_document(path), path);
}

/// Equilogical objects may be given as bare bases, read with the identity relation.
EquObj load_equ(const std::string& path) {
  auto d = read_document(path);
  if (const auto* e = std::get_if<EquObj>(&d)) return *e;
  if (const auto* x = std::get_if<VCatObj>(&d)) return make_equ(*x, Per::discrete(x->size()));
  if (const auto* t = std::get_if<FinTop>(&d)) return make_equ(*t, Per::discrete(t->size()));
  if (const auto* a = std::get_if<FinApp>(&d)) return make_equ(*a, Per::discrete(a->size()));
  throw InputError(path + ": expected an equilogical object, got '" + document_type(d) + "'");
}

MorphClass load_equ_morphism(const std::string& path) {
  auto m = load<Morphism>(path);
  const auto* dom = std::get_if<EquObj>(&m.dom);
  const auto* cod = std::get_if<EquObj>(&m.cod);
  if (!dom || !cod) throw InputError(path + ": endpoints must be equ documents");
  return {*dom, *cod, m.map};
}

Json names_of(const Map& f, const std::vector<std::string>& cod) {
  Json out = Json::array();
  for (auto i : f) out.push_back(cod.at(i));
  return out;
}

Outcome check_morphism(const Morphism& m) {
  Report r;
  std::visit(
      [&](const auto& dom) {
        using T = std::decay_t<decltype(dom)>;
        const auto* cod = std::get_if<T>(&m.cod);
        if (!cod) throw InputError("morphism endpoints have different types");
        if constexpr (std::is_same_v<T, VCatObj>) {
          r.add("vfunctor", is_vfunctor(dom, *cod, m.map));
        } else if constexpr (std::is_same_v<T, FinTop>) {
          r.add("continuous", is_continuous(dom, *cod, m.map));
        } else if constexpr (std::is_same_v<T, FinApp>) {
          r.add("contraction", is_contraction(dom, *cod, m.map));
        } else if constexpr (std::is_same_v<T, EquObj>) {
          r = verify_equ_morphism({dom, *cod, m.map});
        } else if constexpr (std::is_same_v<T, PEquObj>) {
          r.add("vfunctor", is_vfunctor(dom.base, cod->base, m.map));
          r.add("equivariance", is_equivariant(dom.per, cod->per, m.map));
        } else {
          auto tracker = track_check(m.map, dom, *cod);
          r.add("tracked", tracker.has_value(), "no base morphism tracks the function");
        }
      },
      m.dom);
  return from_report(r);
}

Outcome cmd_check(const std::string& path) {
  auto d = read_document(path);
  if (const auto* q = std::get_if<Quantale>(&d)) {
    auto grid = q->default_grid();
    auto r = verify_quantale(*q, grid);
    r.add("exp-condition", check_exp_condition(*q, grid));
    return from_report(r);
  }
  if (const auto* x = std::get_if<VCatObj>(&d)) return from_report(verify_vcat(*x));
  if (const auto* t = std::get_if<FinTop>(&d)) return from_report(verify_space(*t));
  if (const auto* a = std::get_if<FinApp>(&d)) return from_report(verify_space(*a));
  if (const auto* e = std::get_if<EquObj>(&d)) return from_report(verify_equ_object(*e));
  if (const auto* p = std::get_if<PEquObj>(&d)) return from_report(verify_pequ(*p));
  if (const auto* a = std::get_if<Assembly>(&d)) return from_report(verify_assembly(*a));
  if (const auto* s = std::get_if<PseudoEqRel>(&d)) {
    auto v = verify_per(*s);
    auto o = from_report(v.report);
    if (v.r) o.body["r"] = names_of(*v.r, s->x1.carrier());
    if (v.s) o.body["s"] = names_of(*v.s, s->x1.carrier());
    if (v.t) o.body["t"] = names_of(*v.t, s->x1.carrier());
    return o;
  }
  return check_morphism(std::get<Morphism>(d));
}

Json cone_json(const Cone& c, LimitKind kind, const std::vector<EquObj>& inputs) {
  Json legs = Json::array();
  for (std::size_t i = 0; i < c.legs.size(); ++i) {
    const bool into_cone = kind == LimitKind::Coproduct || kind == LimitKind::Coequalizer;
    const auto& cod = into_cone ? base_carrier(c.object.base) : base_carrier(inputs.at(i).base);
    legs.push_back(names_of(c.legs[i], cod));
  }
  return {{"kind", limit_kind_name(kind)}, {"object", print(Document(c.object))}, {"legs", legs}};
}

struct LimitInput {
  std::vector<EquObj> objects;
  std::vector<MorphClass> arrows;
  /// The objects the legs point into (or out of), in leg order.
  std::vector<EquObj> leg_ends;
};

LimitInput load_limit_input(LimitKind kind, const std::vector<std::string>& files) {
  LimitInput in;
  switch (kind) {
    case LimitKind::Product:
    case LimitKind::Coproduct:
      if (files.size() != 2) throw InputError("(co)products take two object files");
      in.objects = {load_equ(files[0]), load_equ(files[1])};
      in.leg_ends = in.objects;
      break;
    case LimitKind::Equalizer:
    case LimitKind::Coequalizer:
      if (files.size() != 2) throw InputError("(co)equalizers take two morphism files");
      in.arrows = {load_equ_morphism(files[0]), load_equ_morphism(files[1])};
      in.leg_ends = {kind == LimitKind::Equalizer ? in.arrows[0].dom : in.arrows[0].cod};
      break;
    default:
      if (files.size() != 1) throw InputError("terminal and initial take one object file");
      in.objects = {load_equ(files[0])};
      break;
  }
  return in;
}

Outcome cmd_limit(const std::string& kind_name, const std::vector<std::string>& files) {
  auto kind = limit_kind_from_name(kind_name);
  auto in = load_limit_input(kind, files);
  auto cone = limit_colimit(kind, in.objects, in.arrows);
  return emit(cone_json(cone, kind, in.leg_ends));
}

Outcome cmd_exp(const std::string& xf, const std::string& yf, bool pequ) {
  if (pequ) {
    auto x = load<PEquObj>(xf);
    auto y = load<PEquObj>(yf);
    auto e = pequ_exponential(x, y);
    return emit({{"object", print(Document(e.object))},
                 {"evaluation", names_of(e.evaluation, y.base.carrier())}});
  }
  auto x = load<VCatObj>(xf);
  auto y = load<VCatObj>(yf);
  auto e = vcat_exponential(x, y);
  Json points = Json::array();
  for (const auto& p : e.points) points.push_back(names_of(p, y.carrier()));
  return emit({{"object", print(Document(e.object))},
               {"points", points},
               {"evaluation", names_of(e.evaluation.map, y.carrier())}});
}

Outcome cmd_hat(const std::string& file) {
  auto e = load_equ(file);
  Map embedding;
  auto p = hat_pequ(e, &embedding);
  return emit({{"object", print(Document(p))}, {"embedding", names_of(embedding, p.base.carrier())}});
}

Outcome cmd_reflect_r(const std::string& file) {
  auto p = load<PEquObj>(file);
  std::vector<std::size_t> inclusion;
  auto e = functor_R(p, &inclusion);
  return emit({{"object", print(Document(e))}, {"inclusion", names_of(inclusion, p.base.carrier())}});
}

Outcome cmd_assm(const std::string& action, const std::vector<std::string>& files) {
  if (action == "exp") {
    if (files.size() != 2) throw InputError("assm exp takes two assembly files");
    auto x = load<Assembly>(files[0]);
    auto y = load<Assembly>(files[1]);
    auto e = assm_exponential(x, y);
    return emit({{"object", print(Document(e.object))},
                 {"modest", is_modest(e.object)},
                 {"evaluation", names_of(e.evaluation, y.elements)}});
  }
  if (files.size() != 1) throw InputError("assm " + action + " takes one assembly file");
  auto a = load<Assembly>(files[0]);
  if (action == "reflect") {
    auto r = modest_reflection(a);
    return emit({{"object", print(Document(r.object))}, {"unit", names_of(r.unit, r.object.elements)}});
  }
  if (action == "subobjects") {
    Outcome o;
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& s : regular_subobjects(a)) {
      Json subset = Json::array();
      for (auto i : s.subset) subset.push_back(a.elements[i]);
      Json entry = {{"subset", subset}, {"certified", s.certified}};
      if (!s.certified) entry["witness"] = s.certificate;
      list.push_back(entry);
      text << (s.certified ? "PASS " : "FAIL ") << subset.dump();
      if (!s.certified) text << ": " << s.certificate;
      text << "\n";
      if (!s.certified) o.code = kExitFailure;
    }
    text << list.size() << " regular subobjects\n";
    o.body = {{"count", list.size()}, {"subobjects", list}};
    o.text = text.str();
    return o;
  }
  throw InputError("unknown assm action '" + action + "'");
}

Outcome cmd_per(const std::string& action, const std::string& file) {
  if (action == "from-equ") return emit(print(Document(equ_per_roundtrip(load_equ(file)))));
  if (action == "kernel") {
    auto m = load<Morphism>(file);
    const auto* dom = std::get_if<VCatObj>(&m.dom);
    const auto* cod = std::get_if<VCatObj>(&m.cod);
    if (!dom || !cod) throw InputError(file + ": kernel pairs need a vcat morphism");
    return emit(print(Document(kernel_pair({*dom, *cod, m.map}))));
  }
  auto s = load<PseudoEqRel>(file);
  if (action == "verify") return cmd_check(file);
  if (action == "to-equ") {
    if (!is_regmono(s)) throw InputError(file + ": the span is not a regular mono");
    return emit(print(Document(per_to_equ(s))));
  }
  if (action == "reflect") {
    auto r = reflect_to_equ(s);
    return emit({{"object", print(Document(r.object))}, {"unit", names_of(r.unit, s.x0.carrier())}});
  }
  if (action == "as-kernel") {
    auto c = per_as_kernel_pair(s);
    Outcome o = emit({{"quotient", print(Document(c.quotient.cod))},
                      {"projection", names_of(c.quotient.map, c.quotient.cod.carrier())},
                      {"kernel", print(Document(c.kernel))},
                      {"reconstructed", c.iso.has_value()}});
    if (c.iso) {
      o.body["iso"] = names_of(*c.iso, c.kernel.x1.carrier());
    } else {
      o.code = kExitFailure;
      o.text += "FAIL the span is not the kernel pair of its quotient\n";
    }
    return o;
  }
  throw InputError("unknown per action '" + action + "'");
}

Direction parse_direction(const std::string& dir) {
  if (dir == "fwd") return Direction::Rightward;
  if (dir == "bwd") return Direction::Leftward;
  throw InputError("--dir must be fwd or bwd");
}

Outcome cmd_adj(const std::string& pair_name, const std::string& dir, const std::string& file) {
  auto pair = transfer_pair_from_name(pair_name);
  auto direction = parse_direction(dir);
  auto d = read_document(file);
  if (const auto* e = std::get_if<EquObj>(&d)) {
    return emit(print(Document(adjunction_transfer(*e, pair, direction))));
  }
  Base b = std::visit(
      [&](const auto& x) -> Base {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VCatObj> || std::is_same_v<T, FinTop> ||
                      std::is_same_v<T, FinApp>) {
          return x;
        } else {
          throw InputError(file + ": adj takes a base or equ document");
        }
      },
      d);
  auto out = transfer_base(b, pair, direction);
  return emit(print_base(out));
}

/// A representative object of a base category, used to build competitor universes.
Base category_sample(const std::string& name) {
  if (name == "top") return FinTop({}, {0});
  if (name == "app") return FinApp({}, {});
  return VCatObj(Quantale::from_name(name), {});
}

std::string quantale_alias(const std::string& base) {
  if (base == "ord") return "two";
  if (base == "met") return "plus";
  if (base == "ultramet") return "max";
  return base;
}

Outcome cmd_oracle(const std::string& action, const std::vector<std::string>& files,
                   const std::string& kind_name, const std::string& pair_name, bool flipped,
                   const std::string& base, SweepConfig sweep) {
  const std::string at = " at carrier ≤ " + std::to_string(sweep.max_carrier);
  if (action == "ump") {
    auto kind = limit_kind_from_name(kind_name);
    auto in = load_limit_input(kind, files);
    auto cone = limit_colimit(kind, in.objects, in.arrows);
    auto extra = occurring_values(cone.object.base);
    auto competitors = competitor_universe(cone.object.base, sweep.max_carrier, extra);
    auto v = verify_universal_property(kind, cone, in.objects, in.arrows, competitors);
    return from_verdict(v, limit_kind_name(kind) + " universal property" + at);
  }
  if (action == "adjunction") {
    auto pair = transfer_pair_from_name(pair_name);
    auto sides = adjoint_pair(pair);
    auto c = competitor_universe(category_sample(transfer_source(pair, sides.left)), sweep.max_carrier);
    auto d = competitor_universe(category_sample(transfer_source(pair, sides.right)), sweep.max_carrier);
    auto v = flipped ? verify_adjunction(pair, c, d, true) : verify_adjunction(pair, c, d);
    return from_verdict(v, transfer_pair_name(pair) + (flipped ? " flipped" : "") + " adjunction");
  }
  if (action == "inject") {
    if (files.size() != 1) throw InputError("oracle inject takes one vcat file");
    auto v = injectivity_test(load<VCatObj>(files[0]), sweep);
    return from_verdict(v, "injectivity");
  }
  if (action == "conditions") {
    auto q = Quantale::from_name(quantale_alias(base));
    auto results = condition_suite(q, sweep);
    Outcome o;
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& r : results) {
      list.push_back({{"condition", r.name}, {"status", status_name(r.status)}, {"detail", r.detail}});
      text << status_name(r.status) << " " << r.name << ": " << r.detail << "\n";
      if (r.status == Status::Fail) o.code = kExitFailure;
    }
    o.body = {{"quantale", q.name()}, {"max_carrier", sweep.max_carrier}, {"conditions", list}};
    o.text = text.str();
    return o;
  }
  throw InputError("unknown oracle action '" + action + "'");
}

Outcome cmd_enumerate(const std::string& af, const std::string& bf) {
  auto a = read_document(af);
  auto b = read_document(bf);
  if (a.index() != b.index()) throw InputError("both files must have the same document type");
  std::vector<Map> maps;
  std::vector<std::string> cod;
  if (const auto* x = std::get_if<Assembly>(&a)) {
    const auto& y = std::get<Assembly>(b);
    maps = enumerate_morphclasses(*x, y);
    cod = y.elements;
  } else if (const auto* x = std::get_if<PEquObj>(&a)) {
    const auto& y = std::get<PEquObj>(b);
    for (auto& c : enumerate_morphclasses(*x, y)) maps.push_back(std::move(c.rep));
    cod = y.base.carrier();
  } else {
    auto ex = load_equ(af);
    auto ey = load_equ(bf);
    for (auto& c : enumerate_morphclasses(ex, ey)) maps.push_back(std::move(c.rep));
    cod = base_carrier(ey.base);
  }
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& m : maps) {
    list.push_back(names_of(m, cod));
    text << list.back().dump() << "\n";
  }
  text << maps.size() << " classes\n";
  Outcome o;
  o.body = {{"count", maps.size()}, {"representatives", list}};
  o.text = text.str();
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions and brute-force checks for equilogical objects"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print a machine-readable JSON report");
  std::function<Outcome()> action;

  auto* check = app.add_subcommand("check", "Verify the axioms of any document");
  std::string file;
  check->add_option("file", file)->required();
  check->callback([&] { action = [&] { return cmd_check(file); }; });

  auto* limit = app.add_subcommand("limit", "Build a limit or colimit");
  std::string kind;
  std::vector<std::string> files;
  limit->add_option("--kind", kind, "product, coproduct, equalizer, coequalizer, terminal, initial")
      ->required();
  limit->add_option("files", files)->required();
  limit->callback([&] { action = [&] { return cmd_limit(kind, files); }; });

  auto* exp = app.add_subcommand("exp", "Exponential of V-categories or partial equilogical objects");
  std::string xf, yf;
  bool pequ = false;
  exp->add_option("x", xf)->required();
  exp->add_option("y", yf)->required();
  exp->add_flag("--pequ", pequ, "Inputs are pequ documents");
  exp->callback([&] { action = [&] { return cmd_exp(xf, yf, pequ); }; });

  auto* hat = app.add_subcommand("hat", "Presheaf partial object of a separated equ object");
  hat->add_option("file", file)->required();
  hat->callback([&] { action = [&] { return cmd_hat(file); }; });

  auto* reflect_r = app.add_subcommand("reflect-r", "Restrict a pequ object to its domain");
  reflect_r->add_option("file", file)->required();
  reflect_r->callback([&] { action = [&] { return cmd_reflect_r(file); }; });

  auto* assm = app.add_subcommand("assm", "Assembly constructions");
  std::string sub;
  assm->add_option("action", sub, "exp, reflect or subobjects")->required();
  assm->add_option("files", files)->required();
  assm->callback([&] { action = [&] { return cmd_assm(sub, files); }; });

  auto* per = app.add_subcommand("per", "Pseudo-equivalence relations");
  per->add_option("action", sub, "verify, to-equ, kernel, as-kernel, reflect or from-equ")->required();
  per->add_option("file", file)->required();
  per->callback([&] { action = [&] { return cmd_per(sub, file); }; });

  auto* adj = app.add_subcommand("adj", "Transfer an object along one of the adjunctions");
  std::string pair, dir;
  adj->add_option("--pair", pair, "ord-met, ord-top, met-app or top-app")->required();
  adj->add_option("--dir", dir, "fwd or bwd")->required();
  adj->add_option("file", file)->required();
  adj->callback([&] { action = [&] { return cmd_adj(pair, dir, file); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force verification at a bounded carrier");
  SweepConfig sweep;
  std::size_t max_carrier = 0;
  std::string base = "ord";
  bool flipped = false;
  oracle->add_option("action", sub, "ump, adjunction, inject or conditions")->required();
  oracle->add_option("files", files);
  oracle->add_option("--max-carrier", max_carrier, "Largest competitor carrier");
  oracle->add_option("--kind", kind, "Limit kind for ump");
  oracle->add_option("--pair", pair, "Transfer pair for adjunction");
  oracle->add_flag("--flipped", flipped, "Swap the roles of the two adjoints");
  oracle->add_option("--base", base, "Quantale for conditions: ord, diamond, met, ultramet");
  oracle->callback([&] {
    action = [&] {
      sweep = SweepConfig::from_env();
      if (max_carrier > 0) sweep.max_carrier = max_carrier;
      return cmd_oracle(sub, files, kind, pair, flipped, base, sweep);
    };
  });

  auto* homs = app.add_subcommand("enumerate-homs", "List one representative per morphism class");
  homs->add_option("a", xf)->required();
  homs->add_option("b", yf)->required();
  homs->callback([&] { action = [&] { return cmd_enumerate(xf, yf); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  auto fail = [&](const std::string& kind_name, const std::string& what, int code) {
    if (json) {
      out << dump(Json{{"status", "error"}, {"error", kind_name}, {"message", what}}) << "\n";
    } else {
      err << kind_name << ": " << what << "\n";
    }
    return code;
  };
  try {
    Outcome o = action();
    if (json) {
      Json report = {{"status", o.code == kExitOk ? "ok" : "fail"}};
      for (auto& [k, v] : o.body.items()) report[k] = v;
      out << dump(report) << "\n";
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const ConstructionRejected& e) {
    return fail("construction rejected", e.what(), kExitFailure);
  } catch (const BoundExceeded& e) {
    return fail("bound exceeded", e.what(), kExitInputError);
  } catch (const InputError& e) {
    return fail("input error", e.what(), kExitInputError);
  }
}

}  // namespace equilog
