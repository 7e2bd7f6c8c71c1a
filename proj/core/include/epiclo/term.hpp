#pragma once

#include "epiclo/algebra.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace epiclo {

// A term is either a variable (index >= 0) or an operation applied to
// subterms.
struct Term {
  std::optional<std::size_t> var;
  std::string op;
  std::vector<Term> args;

  static Term variable(std::size_t i) { return Term{i, {}, {}}; }
  static Term apply(std::string op, std::vector<Term> args = {}) {
    return Term{std::nullopt, std::move(op), std::move(args)};
  }

  bool is_variable() const noexcept { return var.has_value(); }
  // One past the largest variable index occurring in the term.
  std::size_t variable_bound() const noexcept;

  friend bool operator==(Term const&, Term const&) = default;
};

struct Equation {
  Term lhs;
  Term rhs;
  std::string label;  // optional human-readable form, e.g. "a ◁ a = a"

  std::size_t variable_bound() const noexcept;
};

struct QuasiEquation {
  std::vector<Equation> premises;
  Equation conclusion;

  std::size_t variable_bound() const noexcept;
};

// Outcome of an exhaustive scan over assignments. On failure, `equation` is
// the index of the first violated (quasi-)equation and `assignment` the
// offending values of variables 0..k-1.
struct SatisfactionResult {
  bool holds = true;
  std::size_t equation = 0;
  std::vector<Elem> assignment;

  explicit operator bool() const noexcept { return holds; }
};

// Evaluate `t` under an assignment. Throws UnknownOp / TableShape when the
// term does not fit the algebra's signature.
Elem evaluate(FiniteAlgebra const& algebra, Term const& t,
              std::span<Elem const> assignment);

SatisfactionResult satisfies_equations(FiniteAlgebra const& algebra,
                                       std::span<Equation const> eqs);

SatisfactionResult satisfies_quasiequations(FiniteAlgebra const& algebra,
                                            std::span<QuasiEquation const> qeqs);

// Defining equations of a tagged variety (empty for Variety::none).
std::vector<Equation> variety_axioms(Variety v);

namespace terms {
// Shorthands for building equations in code.
inline Term x(std::size_t i) { return Term::variable(i); }
inline Term op(std::string name, std::vector<Term> args = {}) {
  return Term::apply(std::move(name), std::move(args));
}
}  // namespace terms

}  // namespace epiclo
