#pragma once

// JSON encodings:
//   algebra     {"size": n, "signature": [{"name": s, "arity": k}, ...],
//                "tables": {"name": nested-array}, "tag": "group" | ... | null}
//   congruence  list of blocks, e.g. [[0,2],[1,3]]
//   term        {"var": i} or {"op": name, "args": [...]}
//   equation    {"lhs": term, "rhs": term}
//   quasi-eq    {"premises": [equation...], "conclusion": equation}
// A nullary table is a bare element, an arity-k table an array nested k deep.

#include "epiclo/algebra.hpp"
#include "epiclo/congruence.hpp"
#include "epiclo/homomorphism.hpp"
#include "epiclo/term.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

namespace epiclo {

using json = nlohmann::json;

// Throws InvalidInput (with the offending JSON path) for malformed
// documents, then the validate_algebra errors.
FiniteAlgebra algebra_from_json(json const& j);
json to_json(FiniteAlgebra const& a);

Congruence congruence_from_json(FiniteAlgebra const& a, json const& j);
json to_json(Congruence const& r);

Term term_from_json(json const& j);
json to_json(Term const& t);
Equation equation_from_json(json const& j);
json to_json(Equation const& e);
QuasiEquation quasi_equation_from_json(json const& j);
json to_json(QuasiEquation const& q);

json to_json(Homomorphism const& f);

// Reads a JSON file; parse errors carry the byte offset.
json read_json_file(std::filesystem::path const& path);
// Parses a JSON string given on the command line.
json parse_json_text(std::string const& text, std::string const& what);

}  // namespace epiclo
