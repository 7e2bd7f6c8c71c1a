#include "epiclo/io.hpp"

#include "epiclo/error.hpp"

#include <fstream>
#include <sstream>

namespace epiclo {

namespace {

[[noreturn]] void bad(std::string const& where, std::string const& what) {
  throw Error(ErrorCode::InvalidInput, where + ": " + what, {{"path", where}});
}

json const& field(json const& j, char const* key, std::string const& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t integer(json const& j, std::string const& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

void flatten(json const& j, std::size_t n, std::size_t depth,
             std::string const& where, std::vector<std::int64_t>& out) {
  if (depth == 0) {
    out.push_back(integer(j, where));
    return;
  }
  if (!j.is_array() || j.size() != n) {
    throw Error(ErrorCode::TableShape,
                where + ": expected an array of length " + std::to_string(n),
                {{"path", where}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    flatten(j[i], n, depth - 1, where + "[" + std::to_string(i) + "]", out);
  }
}

json nest(std::span<Elem const> flat, std::size_t n, std::size_t depth) {
  if (depth == 0) return flat[0];
  json arr = json::array();
  std::size_t const stride = flat.size() / n;
  for (std::size_t i = 0; i < n; ++i) {
    arr.push_back(nest(flat.subspan(i * stride, stride), n, depth - 1));
  }
  return arr;
}

Equation equation_at(json const& j, std::string const& where);

Term term_at(json const& j, std::string const& where) {
  if (!j.is_object()) bad(where, "term must be an object");
  if (j.contains("var")) {
    auto v = integer(j["var"], where + ".var");
    if (v < 0) bad(where, "negative variable index");
    return Term::variable(static_cast<std::size_t>(v));
  }
  auto const& op = field(j, "op", where);
  if (!op.is_string()) bad(where + ".op", "expected a string");
  std::vector<Term> args;
  if (j.contains("args")) {
    auto const& a = j["args"];
    if (!a.is_array()) bad(where + ".args", "expected an array");
    for (std::size_t i = 0; i < a.size(); ++i) {
      args.push_back(term_at(a[i], where + ".args[" + std::to_string(i) + "]"));
    }
  }
  return Term::apply(op.get<std::string>(), std::move(args));
}

Equation equation_at(json const& j, std::string const& where) {
  Equation e{term_at(field(j, "lhs", where), where + ".lhs"),
             term_at(field(j, "rhs", where), where + ".rhs"), ""};
  if (j.contains("label") && j["label"].is_string()) e.label = j["label"];
  return e;
}

}  // namespace

FiniteAlgebra algebra_from_json(json const& j) {
  std::string const root = "$";
  AlgebraSpec raw;
  auto size = integer(field(j, "size", root), root + ".size");
  if (size <= 0) bad(root + ".size", "size must be positive");
  raw.size = static_cast<std::size_t>(size);

  auto const& sig = field(j, "signature", root);
  if (!sig.is_array()) bad(root + ".signature", "expected an array");
  std::vector<Operation> ops;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    std::string const where = root + ".signature[" + std::to_string(i) + "]";
    auto const& name = field(sig[i], "name", where);
    if (!name.is_string()) bad(where + ".name", "expected a string");
    auto arity = integer(field(sig[i], "arity", where), where + ".arity");
    if (arity < 0) bad(where + ".arity", "arity must be non-negative");
    ops.push_back({name.get<std::string>(), static_cast<std::size_t>(arity)});
  }
  raw.signature = Signature(std::move(ops));

  auto const& tables = field(j, "tables", root);
  if (!tables.is_object()) bad(root + ".tables", "expected an object");
  for (auto const& op : raw.signature.ops()) {
    std::string const where = root + ".tables." + op.name;
    auto it = tables.find(op.name);
    if (it == tables.end()) {
      throw Error(ErrorCode::TableShape, where + ": missing table",
                  {{"path", where}});
    }
    std::vector<std::int64_t> flat;
    flatten(*it, raw.size, op.arity, where, flat);
    raw.tables.push_back(std::move(flat));
  }
  if (tables.size() != raw.signature.size()) {
    bad(root + ".tables", "tables for operations outside the signature");
  }

  if (j.contains("tag") && !j["tag"].is_null()) {
    if (!j["tag"].is_string()) bad(root + ".tag", "expected a string or null");
    auto v = variety_from_string(j["tag"].get<std::string>());
    if (!v) bad(root + ".tag", "unknown variety '" + j["tag"].get<std::string>() + "'");
    raw.tag = *v;
  }
  return validate_algebra(raw);
}

json to_json(FiniteAlgebra const& a) {
  json sig = json::array();
  json tables = json::object();
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    auto const& o = a.signature()[op];
    sig.push_back({{"name", o.name}, {"arity", o.arity}});
    tables[o.name] = nest(a.table(op), a.size(), o.arity);
  }
  json tag = a.tag() == Variety::none ? json(nullptr) : json(std::string(to_string(a.tag())));
  return {{"size", a.size()}, {"signature", sig}, {"tables", tables}, {"tag", tag}};
}

Congruence congruence_from_json(FiniteAlgebra const& a, json const& j) {
  if (!j.is_array()) bad("$", "congruence must be a list of blocks");
  std::vector<std::vector<Elem>> blocks;
  for (std::size_t b = 0; b < j.size(); ++b) {
    std::string const where = "$[" + std::to_string(b) + "]";
    if (!j[b].is_array()) bad(where, "block must be an array");
    std::vector<Elem> block;
    for (std::size_t i = 0; i < j[b].size(); ++i) {
      auto v = integer(j[b][i], where + "[" + std::to_string(i) + "]");
      if (v < 0 || static_cast<std::size_t>(v) >= a.size()) {
        throw Error(ErrorCode::OutOfRange,
                    where + ": element " + std::to_string(v) + " outside carrier");
      }
      block.push_back(static_cast<Elem>(v));
    }
    blocks.push_back(std::move(block));
  }
  return Congruence::from_blocks(a, blocks);
}

json to_json(Congruence const& r) {
  json out = json::array();
  for (auto const& b : r.blocks()) out.push_back(b);
  return out;
}

Term term_from_json(json const& j) { return term_at(j, "$"); }

json to_json(Term const& t) {
  if (t.var) return {{"var", *t.var}};
  json args = json::array();
  for (auto const& a : t.args) args.push_back(to_json(a));
  return {{"op", t.op}, {"args", args}};
}

Equation equation_from_json(json const& j) { return equation_at(j, "$"); }

json to_json(Equation const& e) {
  json j = {{"lhs", to_json(e.lhs)}, {"rhs", to_json(e.rhs)}};
  if (!e.label.empty()) j["label"] = e.label;
  return j;
}

QuasiEquation quasi_equation_from_json(json const& j) {
  QuasiEquation q;
  auto const& premises = field(j, "premises", "$");
  if (!premises.is_array()) bad("$.premises", "expected an array");
  for (std::size_t i = 0; i < premises.size(); ++i) {
    q.premises.push_back(
        equation_at(premises[i], "$.premises[" + std::to_string(i) + "]"));
  }
  q.conclusion = equation_at(field(j, "conclusion", "$"), "$.conclusion");
  return q;
}

json to_json(QuasiEquation const& q) {
  json premises = json::array();
  for (auto const& p : q.premises) premises.push_back(to_json(p));
  return {{"premises", premises}, {"conclusion", to_json(q.conclusion)}};
}

json to_json(Homomorphism const& f) {
  return {{"map", f.map()}, {"surjective", f.surjective()}};
}

json read_json_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.string());
}

json parse_json_text(std::string const& text, std::string const& what) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    throw Error(ErrorCode::InvalidInput,
                "malformed JSON in " + what + " at byte " + std::to_string(e.byte) +
                    ": " + e.what(),
                {{"source", what}, {"byte", e.byte}});
  }
}

}  // namespace epiclo
