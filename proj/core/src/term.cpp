#include "epiclo/term.hpp"

#include "epiclo/error.hpp"

#include <algorithm>

namespace epiclo {

std::size_t Term::variable_bound() const noexcept {
  if (var) return *var + 1;
  std::size_t b = 0;
  for (auto const& a : args) b = std::max(b, a.variable_bound());
  return b;
}

std::size_t Equation::variable_bound() const noexcept {
  return std::max(lhs.variable_bound(), rhs.variable_bound());
}

std::size_t QuasiEquation::variable_bound() const noexcept {
  std::size_t b = conclusion.variable_bound();
  for (auto const& p : premises) b = std::max(b, p.variable_bound());
  return b;
}

namespace {

// Term with operation names resolved to indices.
struct Compiled {
  std::size_t var = 0;
  std::size_t op = 0;
  bool is_var = false;
  std::vector<Compiled> args;
};

Compiled compile(FiniteAlgebra const& algebra, Term const& t) {
  if (t.var) return Compiled{*t.var, 0, true, {}};
  std::size_t op = algebra.op_index(t.op);
  if (algebra.arity(op) != t.args.size()) {
    throw Error(ErrorCode::TableShape,
                "operation '" + t.op + "' applied to " +
                    std::to_string(t.args.size()) + " arguments, arity is " +
                    std::to_string(algebra.arity(op)));
  }
  Compiled c{0, op, false, {}};
  c.args.reserve(t.args.size());
  for (auto const& a : t.args) c.args.push_back(compile(algebra, a));
  return c;
}

Elem eval(FiniteAlgebra const& algebra, Compiled const& c,
          std::span<Elem const> assignment) {
  if (c.is_var) return assignment[c.var];
  switch (c.args.size()) {
    case 0: return algebra.apply(c.op);
    case 1: return algebra.apply(c.op, eval(algebra, c.args[0], assignment));
    case 2:
      return algebra.apply(c.op, eval(algebra, c.args[0], assignment),
                           eval(algebra, c.args[1], assignment));
    default: break;
  }
  std::vector<Elem> vals;
  vals.reserve(c.args.size());
  for (auto const& a : c.args) vals.push_back(eval(algebra, a, assignment));
  return algebra.apply(c.op, vals);
}

struct CompiledEquation {
  Compiled lhs;
  Compiled rhs;
};

CompiledEquation compile(FiniteAlgebra const& algebra, Equation const& e) {
  return {compile(algebra, e.lhs), compile(algebra, e.rhs)};
}

bool holds(FiniteAlgebra const& algebra, CompiledEquation const& e,
           std::span<Elem const> assignment) {
  return eval(algebra, e.lhs, assignment) == eval(algebra, e.rhs, assignment);
}

// Calls visit(assignment) for every assignment of k variables, in
// lexicographic order, until visit returns false.
template <typename Visit>
bool for_each_assignment(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<Elem> a(k, 0);
  while (true) {
    if (!visit(std::span<Elem const>(a))) return false;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++a[i] < n) break;
      a[i] = 0;
      if (i == 0) return true;
    }
    if (k == 0) return true;
  }
}

}  // namespace

Elem evaluate(FiniteAlgebra const& algebra, Term const& t,
              std::span<Elem const> assignment) {
  if (assignment.size() < t.variable_bound()) {
    throw Error(ErrorCode::InvalidInput, "assignment too short for term");
  }
  return eval(algebra, compile(algebra, t), assignment);
}

SatisfactionResult satisfies_equations(FiniteAlgebra const& algebra,
                                       std::span<Equation const> eqs) {
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    auto compiled = compile(algebra, eqs[i]);
    SatisfactionResult result;
    for_each_assignment(algebra.size(), eqs[i].variable_bound(),
                        [&](std::span<Elem const> a) {
                          if (holds(algebra, compiled, a)) return true;
                          result = {false, i, {a.begin(), a.end()}};
                          return false;
                        });
    if (!result) return result;
  }
  return {};
}

SatisfactionResult satisfies_quasiequations(FiniteAlgebra const& algebra,
                                            std::span<QuasiEquation const> qeqs) {
  for (std::size_t i = 0; i < qeqs.size(); ++i) {
    std::vector<CompiledEquation> premises;
    for (auto const& p : qeqs[i].premises) premises.push_back(compile(algebra, p));
    auto conclusion = compile(algebra, qeqs[i].conclusion);
    SatisfactionResult result;
    for_each_assignment(
        algebra.size(), qeqs[i].variable_bound(), [&](std::span<Elem const> a) {
          for (auto const& p : premises) {
            if (!holds(algebra, p, a)) return true;
          }
          if (holds(algebra, conclusion, a)) return true;
          result = {false, i, {a.begin(), a.end()}};
          return false;
        });
    if (!result) return result;
  }
  return {};
}

std::vector<Equation> variety_axioms(Variety v) {
  using terms::op;
  using terms::x;
  auto a = x(0), b = x(1), c = x(2);
  switch (v) {
    case Variety::group:
      return {
          {op("mul", {op("mul", {a, b}), c}), op("mul", {a, op("mul", {b, c})}),
           "(a b) c = a (b c)"},
          {op("mul", {op("e"), a}), a, "e a = a"},
          {op("mul", {a, op("e")}), a, "a e = a"},
          {op("mul", {a, op("inv", {a})}), op("e"), "a a⁻¹ = e"},
          {op("mul", {op("inv", {a}), a}), op("e"), "a⁻¹ a = e"},
      };
    case Variety::commutative_rng:
      return {
          {op("add", {op("add", {a, b}), c}), op("add", {a, op("add", {b, c})}),
           "(a + b) + c = a + (b + c)"},
          {op("add", {a, b}), op("add", {b, a}), "a + b = b + a"},
          {op("add", {a, op("zero")}), a, "a + 0 = a"},
          {op("add", {a, op("neg", {a})}), op("zero"), "a + (-a) = 0"},
          {op("mul", {op("mul", {a, b}), c}), op("mul", {a, op("mul", {b, c})}),
           "(a b) c = a (b c)"},
          {op("mul", {a, b}), op("mul", {b, a}), "a b = b a"},
          {op("mul", {a, op("add", {b, c})}),
           op("add", {op("mul", {a, b}), op("mul", {a, c})}),
           "a (b + c) = a b + a c"},
      };
    case Variety::quandle:
      return {
          {op("rhd", {a, a}), a, "a ◁ a = a"},
          {op("rhd_inv", {op("rhd", {a, b}), b}), a, "(a ◁ b) ◁⁻¹ b = a"},
          {op("rhd", {op("rhd_inv", {a, b}), b}), a, "(a ◁⁻¹ b) ◁ b = a"},
          {op("rhd", {op("rhd", {a, b}), c}),
           op("rhd", {op("rhd", {a, c}), op("rhd", {b, c})}),
           "(a ◁ b) ◁ c = (a ◁ c) ◁ (b ◁ c)"},
      };
    case Variety::none: break;
  }
  return {};
}

}  // namespace epiclo
