#include "cli.hpp"

#include "epiclo/closure.hpp"
#include "epiclo/corpus.hpp"
#include "epiclo/error.hpp"
#include "epiclo/instances.hpp"
#include "epiclo/io.hpp"
#include "epiclo/quotient_form.hpp"
#include "epiclo/reflection.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

namespace epiclo::cli {

namespace {

struct Options {
  std::string algebra;
  std::string target;
  std::string congruence;
  std::string target_congruence;
  std::string map;
  std::vector<std::string> operators;
  std::string corpus;
  std::size_t max_size = 0;
  std::string report;
};

// Reported failure of a mathematical check; carries the JSON result.
struct CheckFailed {
  json result;
};

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput:
    case ErrorCode::TableShape:
    case ErrorCode::OutOfRange:
    case ErrorCode::UnknownOp:
    case ErrorCode::SignatureMismatch:
    case ErrorCode::FibreMismatch:
    case ErrorCode::NotCongruence:
    case ErrorCode::NotHomomorphism:
    case ErrorCode::NotMember:
    case ErrorCode::NotRng:
    case ErrorCode::NotQuandle:
    case ErrorCode::NotGroup:
    case ErrorCode::SizeTooLarge:
    case ErrorCode::UniverseMismatch:
      return true;
    default:
      return false;
  }
}

std::size_t default_max_size(CorpusKind k) {
  switch (k) {
    case CorpusKind::groups: return 8;
    case CorpusKind::rngs: return 12;
    case CorpusKind::quandles: return 3;
  }
  return 1;
}

class Session {
 public:
  explicit Session(Options const& o) : o_(o) {}

  FiniteAlgebra algebra() const {
    require(o_.algebra, "--algebra");
    return algebra_from_json(read_json_file(o_.algebra));
  }

  // Defaults to --algebra for endomorphisms.
  FiniteAlgebra target() const {
    if (o_.target.empty()) return algebra();
    return algebra_from_json(read_json_file(o_.target));
  }

  Congruence congruence(FiniteAlgebra const& a, std::string const& text,
                        char const* flag) const {
    require(text, flag);
    auto j = parse_json_text(text, flag);
    // Elements left out of the block list are singletons, so "[[0]]" is Δ.
    if (j.is_array()) {
      std::vector<bool> seen(a.size(), false);
      for (auto const& block : j) {
        if (!block.is_array()) break;
        for (auto const& v : block) {
          if (v.is_number_unsigned() && v.get<std::size_t>() < a.size()) {
            seen[v.get<std::size_t>()] = true;
          }
        }
      }
      for (std::size_t x = 0; x < a.size(); ++x) {
        if (!seen[x]) j.push_back(json::array({x}));
      }
    }
    return congruence_from_json(a, j);
  }

  Homomorphism hom(FiniteAlgebra const& dom, FiniteAlgebra const& cod) const {
    require(o_.map, "--map");
    auto j = parse_json_text(o_.map, "--map");
    if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "--map must be a JSON array");
    std::vector<Elem> map;
    for (auto const& v : j) {
      if (!v.is_number_unsigned()) {
        throw Error(ErrorCode::InvalidInput, "--map entries must be non-negative integers");
      }
      map.push_back(v.get<Elem>());
    }
    return Homomorphism(dom, cod, std::move(map));
  }

  std::optional<CorpusKind> corpus_kind() const {
    if (o_.corpus.empty()) return std::nullopt;
    auto k = corpus_kind_from_string(o_.corpus);
    if (!k) {
      throw Error(ErrorCode::InvalidInput, "unknown corpus '" + o_.corpus +
                                               "' (groups, rngs, quandles)");
    }
    return k;
  }

  // The corpus when given, otherwise the quotient closure of --algebra.
  UniversePtr universe() {
    if (universe_) return universe_;
    if (auto k = corpus_kind()) {
      universe_ = epiclo::corpus(*k, o_.max_size ? o_.max_size : default_max_size(*k));
    } else if (!o_.algebra.empty()) {
      universe_ = Universe::quotient_closure({algebra()}, "input");
    } else {
      throw Error(ErrorCode::InvalidInput, "need --corpus or --algebra");
    }
    return universe_;
  }

  ClosureOperator op(std::string const& spec) {
    auto u = universe();
    if (spec == "identity") return identity_operator(u);
    if (spec == "top") return top_operator(u);
    if (spec == "nilradical") return nilradical_operator(u);
    if (spec == "quandle-trivial") return quandle_closure_operator(u);
    if (spec == "abelianization") return abelianization_operator(u);
    if (spec == "elementary-abelian-2") return elementary_abelian2_operator(u);
    if (!std::filesystem::exists(spec)) {
      throw Error(ErrorCode::InvalidInput,
                  "unknown operator '" + spec +
                      "' (identity, top, nilradical, quandle-trivial, abelianization, "
                      "elementary-abelian-2, or a JSON file)");
    }
    auto j = read_json_file(spec);
    std::string name = j.value("name", std::filesystem::path(spec).stem().string());
    SubcategoryPredicate pred;
    if (j.contains("equations")) {
      std::vector<Equation> eqs;
      for (auto const& e : j["equations"]) eqs.push_back(equation_from_json(e));
      pred = SubcategoryPredicate::from_equations(name, std::move(eqs));
    } else if (j.contains("quasi_equations")) {
      std::vector<QuasiEquation> qs;
      for (auto const& q : j["quasi_equations"]) qs.push_back(quasi_equation_from_json(q));
      pred = SubcategoryPredicate::from_quasi_equations(name, std::move(qs));
    } else {
      throw Error(ErrorCode::InvalidInput,
                  spec + ": operator file needs 'equations' or 'quasi_equations'");
    }
    return closure_from_reflector(oracle_reflector(u, pred));
  }

  ClosureOperator single_op() {
    if (o_.operators.size() != 1) {
      throw Error(ErrorCode::InvalidInput, "expected exactly one --operator");
    }
    return op(o_.operators.front());
  }

 private:
  static void require(std::string const& v, char const* flag) {
    if (v.empty()) throw Error(ErrorCode::InvalidInput, std::string("missing ") + flag);
  }

  Options const& o_;
  UniversePtr universe_;
};

json universe_json(Universe const& u) {
  return {{"name", u.name()}, {"members", u.size()}};
}

json cmd_validate(Session& s, std::ostream& err) {
  auto a = s.algebra();
  err << "valid " << to_string(a.tag()) << " of size " << a.size() << "\n";
  return {{"valid", true}, {"size", a.size()}, {"tag", to_string(a.tag())},
          {"algebra", to_json(a)}};
}

json cmd_con_lattice(Session& s, std::ostream& err) {
  auto a = s.algebra();
  auto lat = con_lattice(a);
  json list = json::array();
  for (auto const& r : lat) list.push_back(to_json(r));
  err << lat.size() << " congruences\n";
  return {{"size", a.size()}, {"count", lat.size()}, {"congruences", list}};
}

json cmd_close(Session& s, Options const& o, std::ostream& err) {
  auto a = s.algebra();
  auto r = s.congruence(a, o.congruence, "--congruence");
  auto c = s.single_op();
  auto closed = c.apply(a, r);
  err << c.name() << ": " << to_json(r).dump() << " -> " << to_json(closed).dump() << "\n";
  return {{"operator", c.name()}, {"congruence", to_json(r)}, {"closure", to_json(closed)}};
}

json cmd_lift(Session& s, Options const& o, std::ostream& err) {
  auto x = s.algebra();
  auto y = s.target();
  auto f = s.hom(x, y);
  auto r = s.congruence(x, o.congruence, "--congruence");
  auto t = s.congruence(y, o.target_congruence, "--target-congruence");
  bool const l = lifts(f, r, t);
  err << (l ? "lifts" : "does not lift") << "\n";
  return {{"lifts", l}, {"map", f.map()}};
}

json cmd_push(Session& s, Options const& o, std::ostream& err) {
  auto x = s.algebra();
  auto y = s.target();
  auto f = s.hom(x, y);
  auto r = s.congruence(x, o.congruence, "--congruence");
  auto img = image_congruence(f, r);
  err << "image " << to_json(img).dump() << "\n";
  return {{"image", to_json(img)}};
}

json cmd_pull(Session& s, Options const& o, std::ostream& err) {
  auto x = s.algebra();
  auto y = s.target();
  auto f = s.hom(x, y);
  auto t = s.congruence(y, o.target_congruence, "--target-congruence");
  auto pre = preimage_congruence(f, t);
  err << "preimage " << to_json(pre).dump() << "\n";
  return {{"preimage", to_json(pre)}};
}

json cmd_reflect(Session& s, std::ostream& err) {
  auto a = s.algebra();
  auto c = s.single_op();
  auto refl = reflector_from_closure(c);
  auto rho = refl.rho(a);
  auto q = quotient(a, rho);
  bool const member = rho.is_identity();
  err << "reflection of size " << q.algebra.size() << (member ? " (already closed)" : "")
      << "\n";
  return {{"operator", c.name()},
          {"rho", to_json(rho)},
          {"member", member},
          {"reflection", to_json(q.algebra)},
          {"unit", q.projection.map()}};
}

json cmd_check_operator(Session& s, std::ostream& err) {
  auto c = s.single_op();
  auto report = operator_report(c);
  report["universe"] = universe_json(*c.universe());
  for (auto key : {"extensive", "natural", "idempotent", "cohereditary", "minimal",
                   "preserves_pushouts"}) {
    err << key << ": " << (report[key].get<bool>() ? "yes" : "no") << "\n";
  }
  return report;
}

json cmd_roundtrip(Session& s, std::ostream& err) {
  auto c = s.single_op();
  auto closure = roundtrip_closure(c);
  json out = {{"operator", c.name()},
              {"universe", universe_json(*c.universe())},
              {"closure_roundtrip", closure.holds}};
  if (!closure) out["witness"] = closure.witness;
  if (closure) {
    auto refl = roundtrip_reflector(reflector_from_closure(c));
    out["reflector_roundtrip"] = refl.holds;
    if (!refl) out["witness"] = refl.witness;
  } else {
    out["reflector_roundtrip"] = false;
  }
  bool const pass = out["closure_roundtrip"] == true && out["reflector_roundtrip"] == true;
  out["pass"] = pass;
  err << (pass ? "PASS" : "FAIL") << " roundtrip " << c.name() << "\n";
  if (!pass) throw CheckFailed{out};
  return out;
}

json cmd_birkhoff(Session& s, std::ostream& err) {
  auto c = s.single_op();
  auto r = birkhoff_check(c);
  json out = {{"operator", c.name()},
              {"universe", universe_json(*c.universe())},
              {"minimal", r.minimal},
              {"closed_under_quotients", r.closed_under_quotients},
              {"consistent", r.consistent()},
              {"witness", r.witness}};
  err << (r.consistent() ? "PASS" : "FAIL") << " birkhoff " << c.name()
      << " (minimal: " << r.minimal << ")\n";
  if (!r.consistent()) throw CheckFailed{out};
  return out;
}

json cmd_antitone(Session& s, Options const& o, std::ostream& err) {
  if (o.operators.size() != 2) {
    throw Error(ErrorCode::InvalidInput, "antitone needs two --operator flags");
  }
  auto c1 = s.op(o.operators[0]);
  auto c2 = s.op(o.operators[1]);
  auto r = antitone_check(c1, c2);
  json out = {{"operators", {c1.name(), c2.name()}},
              {"universe", universe_json(*c1.universe())},
              {"leq", r.leq},
              {"inclusion", r.inclusion},
              {"consistent", r.consistent()},
              {"witness", r.witness}};
  err << (r.consistent() ? "PASS" : "FAIL") << " antitone " << c1.name() << " <= "
      << c2.name() << ": " << r.leq << "\n";
  if (!r.consistent()) throw CheckFailed{out};
  return out;
}

json cmd_corpus(Session& s, Options const& o, std::ostream& err) {
  if (o.corpus.empty()) throw Error(ErrorCode::InvalidInput, "missing --corpus");
  auto u = s.universe();
  json list = json::array();
  for (std::size_t i = 0; i < u->size(); ++i) {
    list.push_back({{"id", u->id(i)},
                    {"size", u->algebra(i).size()},
                    {"congruences", u->lattice(i).size()},
                    {"algebra", to_json(u->algebra(i))}});
  }
  err << u->size() << " algebras in " << u->name() << "\n";
  return {{"corpus", u->name()}, {"count", u->size()}, {"algebras", list}};
}

struct Suite {
  json checks = json::array();
  bool pass = true;
  std::ostream& err;

  void record(std::string const& name, std::string const& op, bool ok, json witness = nullptr) {
    json c = {{"check", name}, {"operator", op}, {"pass", ok}};
    if (!ok) c["witness"] = std::move(witness);
    checks.push_back(std::move(c));
    pass = pass && ok;
    err << (ok ? "PASS " : "FAIL ") << name << " " << op << "\n";
  }
};

json cmd_verify_all(Session& s, Options const& o, std::ostream& err) {
  auto kind = s.corpus_kind();
  if (!kind) throw Error(ErrorCode::InvalidInput, "missing --corpus");
  auto u = s.universe();

  std::vector<std::pair<ClosureOperator, SubcategoryPredicate>> ops;
  ops.emplace_back(identity_operator(u),
                   SubcategoryPredicate{"all", [](FiniteAlgebra const&) { return true; }});
  ops.emplace_back(top_operator(u), SubcategoryPredicate{"trivial", [](FiniteAlgebra const& x) {
                                      return x.size() == 1;
                                    }});
  switch (*kind) {
    case CorpusKind::groups:
      ops.emplace_back(abelianization_operator(u), abelian_groups());
      ops.emplace_back(elementary_abelian2_operator(u), elementary_abelian2_groups());
      break;
    case CorpusKind::rngs:
      ops.emplace_back(nilradical_operator(u), reduced_rngs());
      break;
    case CorpusKind::quandles:
      ops.emplace_back(quandle_closure_operator(u), trivial_quandles());
      break;
  }

  Suite suite{json::array(), true, err};
  for (auto const& [c, pred] : ops) {
    json w = json::object();
    bool axioms = true;
    for (auto const& [key, v] :
         {std::pair{"extensive", is_extensive(c)}, std::pair{"natural", is_natural(c)},
          std::pair{"idempotent", is_idempotent(c)},
          std::pair{"cohereditary", is_cohereditary(c)}}) {
      if (!v) {
        axioms = false;
        w[key] = v.witness;
      }
    }
    suite.record("axioms", c.name(), axioms, w);

    auto minimal = is_minimal(c);
    auto pushouts = preserves_cocartesian(c);
    suite.record("minimal-iff-pushouts", c.name(), minimal.holds == pushouts.holds,
                 {{"minimal", minimal.holds}, {"preserves_pushouts", pushouts.holds}});

    auto rc = roundtrip_closure(c);
    suite.record("roundtrip-closure", c.name(), rc.holds, rc.witness);
    auto rr = rc ? roundtrip_reflector(reflector_from_closure(c)) : rc;
    suite.record("roundtrip-reflector", c.name(), rr.holds, rr.witness);

    if (axioms) {
      auto b = birkhoff_check(c);
      suite.record("birkhoff", c.name(), b.consistent(),
                   {{"minimal", b.minimal},
                    {"closed_under_quotients", b.closed_under_quotients},
                    {"witness", b.witness}});
    }

    try {
      auto oracle = closure_from_reflector(oracle_reflector(u, pred));
      bool const same = oracle == c;
      suite.record("oracle-agreement", c.name(), same, {{"predicate", pred.name}});
    } catch (Error const& e) {
      suite.record("oracle-agreement", c.name(), false,
                   {{"predicate", pred.name}, {"error", e.what()}});
    }
  }
  for (auto const& a : ops) {
    for (auto const& b : ops) {
      auto r = antitone_check(a.first, b.first);
      suite.record("antitone", a.first.name() + " <= " + b.first.name(), r.consistent(),
                   {{"leq", r.leq}, {"inclusion", r.inclusion}, {"witness", r.witness}});
    }
  }

  json out = {{"corpus", std::string(to_string(*kind))},
              {"max_size", o.max_size ? o.max_size : default_max_size(*kind)},
              {"universe", universe_json(*u)},
              {"checks", suite.checks},
              {"pass", suite.pass}};
  if (!suite.pass) throw CheckFailed{out};
  return out;
}

void emit(json const& j, Options const& o, std::ostream& out) {
  out << j.dump(2) << "\n";
  if (!o.report.empty()) {
    std::ofstream f(o.report);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + o.report);
    f << j.dump(2) << "\n";
  }
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closure operators on congruence lattices of finite algebras", "epiclo"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "algebra JSON file");
    sub->add_option("--congruence", o.congruence, "congruence as a JSON list of blocks");
    sub->add_option("--operator", o.operators, "operator name or JSON file");
    sub->add_option("--corpus", o.corpus, "groups, rngs or quandles");
    sub->add_option("--max-size", o.max_size, "largest corpus algebra");
    sub->add_option("--report", o.report, "also write the JSON report here");
  };
  auto add_map = [&](CLI::App* sub) {
    sub->add_option("--target", o.target, "codomain algebra JSON file");
    sub->add_option("--map", o.map, "hom as a JSON array")->required();
    sub->add_option("--target-congruence", o.target_congruence, "congruence on the codomain");
  };

  std::vector<std::pair<CLI::App*, std::string>> subs;
  for (auto const& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"validate", "check an algebra"},
           {"con-lattice", "list all congruences"},
           {"close", "apply an operator to a congruence"},
           {"lift", "does f lift R to S"},
           {"push", "image congruence along a surjection"},
           {"pull", "preimage congruence"},
           {"reflect", "reflection of an algebra"},
           {"check-operator", "axiom report for an operator"},
           {"roundtrip", "closure/reflector round trips"},
           {"birkhoff", "minimality vs closure under quotients"},
           {"antitone", "operator order vs subcategory inclusion"},
           {"corpus", "list a corpus"},
           {"verify-all", "run every check on a corpus"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "lift" || name == "push" || name == "pull") add_map(sub);
    subs.emplace_back(sub, name);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    err << e.what() << "\n";
    out << json{{"error", "InvalidInput"}, {"message", e.what()}}.dump(2) << "\n";
    return kInputError;
  }

  std::string command;
  for (auto const& [sub, name] : subs) {
    if (sub->parsed()) command = name;
  }

  Session s(o);
  try {
    json result;
    if (command == "validate") result = cmd_validate(s, err);
    else if (command == "con-lattice") result = cmd_con_lattice(s, err);
    else if (command == "close") result = cmd_close(s, o, err);
    else if (command == "lift") result = cmd_lift(s, o, err);
    else if (command == "push") result = cmd_push(s, o, err);
    else if (command == "pull") result = cmd_pull(s, o, err);
    else if (command == "reflect") result = cmd_reflect(s, err);
    else if (command == "check-operator") result = cmd_check_operator(s, err);
    else if (command == "roundtrip") result = cmd_roundtrip(s, err);
    else if (command == "birkhoff") result = cmd_birkhoff(s, err);
    else if (command == "antitone") result = cmd_antitone(s, o, err);
    else if (command == "corpus") result = cmd_corpus(s, o, err);
    else if (command == "verify-all") result = cmd_verify_all(s, o, err);
    emit(result, o, out);
    return kOk;
  } catch (CheckFailed const& f) {
    emit(f.result, o, out);
    return kCheckFailed;
  } catch (Error const& e) {
    json j = {{"error", std::string(to_string(e.code()))},
              {"message", e.what()},
              {"witness", e.witness()}};
    err << e.what() << "\n";
    try {
      emit(j, o, out);
    } catch (Error const&) {
      out << j.dump(2) << "\n";
    }
    return is_input_error(e.code()) ? kInputError : kCheckFailed;
  }
}

}  // namespace epiclo::cli
