#pragma once

#include "epiclo/closure.hpp"
#include "epiclo/congruence.hpp"
#include "epiclo/term.hpp"
#include "epiclo/universe.hpp"

#include <functional>
#include <string>
#include <vector>

namespace epiclo {

// A reflection into a full subcategory, stored as one congruence ρ_X per
// member: L(X) = X/ρ_X and η_X is the canonical projection. Members of the
// subcategory are exactly those with ρ_X = Δ.
class Reflector {
 public:
  // Checks that every L(X) is in the subcategory and that every hom from X
  // into a member of the subcategory factors through η_X. Throws
  // NotReflective (with witness) or UniverseNotQuotientClosed.
  static Reflector make(UniversePtr universe, std::vector<Congruence> rho,
                        std::string name);
  static Reflector from_rule(UniversePtr universe,
                             std::function<Congruence(FiniteAlgebra const&)> const& rule,
                             std::string name);

  std::string const& name() const noexcept { return name_; }
  UniversePtr const& universe() const noexcept { return universe_; }
  Congruence const& rho(std::size_t member) const { return rho_[member]; }
  std::vector<Congruence> const& rhos() const noexcept { return rho_; }
  // ρ for any algebra isomorphic to a member. Throws NotMember.
  Congruence rho(FiniteAlgebra const& x) const;
  // (L(X), η_X).
  Quotient reflect(FiniteAlgebra const& x) const;

  friend bool operator==(Reflector const& a, Reflector const& b) {
    return a.universe_ == b.universe_ && a.rho_ == b.rho_;
  }

 private:
  Reflector(UniversePtr u, std::vector<Congruence> rho, std::string name)
      : universe_(std::move(u)), rho_(std::move(rho)), name_(std::move(name)) {}

  UniversePtr universe_;
  std::vector<Congruence> rho_;
  std::string name_;
};

// Identity reflection (ρ = Δ) and reflection onto one-element algebras.
Reflector identity_reflector(UniversePtr universe);
Reflector terminal_reflector(UniversePtr universe);

// C_X(R) = preimage of ρ_{X/R} along X -> X/R.
// Throws UniverseNotQuotientClosed.
ClosureOperator closure_from_reflector(Reflector const& reflector);

// ρ_X = C_X(Δ). Throws NotIdempotent / NotCohereditary with a witness.
Reflector reflector_from_closure(ClosureOperator const& c);

bool membership(ClosureOperator const& c, FiniteAlgebra const& x);
bool membership(Reflector const& r, FiniteAlgebra const& x);

// A full replete subcategory given by a membership test.
struct SubcategoryPredicate {
  std::string name;
  std::function<bool(FiniteAlgebra const&)> contains;

  static SubcategoryPredicate from_equations(std::string name,
                                             std::vector<Equation> eqs);
  static SubcategoryPredicate from_quasi_equations(std::string name,
                                                   std::vector<QuasiEquation> qeqs);
  // Objects whose smallest congruence is closed.
  static SubcategoryPredicate from_operator(ClosureOperator c);
  static SubcategoryPredicate from_reflector(Reflector r);
};

// Every quotient of a member in the subcategory is again in it.
Verdict closed_under_quotients(SubcategoryPredicate const& pred,
                               Universe const& universe);

// closure_from_reflector(reflector_from_closure(C)) == C pointwise.
Verdict roundtrip_closure(ClosureOperator const& c);
// reflector_from_closure(closure_from_reflector(R)) has the same ρ.
Verdict roundtrip_reflector(Reflector const& r);

struct BirkhoffResult {
  bool minimal = false;
  bool closed_under_quotients = false;
  nlohmann::json witness = nullptr;  // from whichever side failed

  bool consistent() const noexcept { return minimal == closed_under_quotients; }
};

// For an idempotent cohereditary C: is_minimal(C) against
// closed_under_quotients(subcategory of C). Throws PreconditionFailed.
BirkhoffResult birkhoff_check(ClosureOperator const& c);

struct AntitoneResult {
  bool leq = false;        // C1 ⩽ C2
  bool inclusion = false;  // subcategory(C2) ⊆ subcategory(C1)
  nlohmann::json witness = nullptr;

  bool consistent() const noexcept { return leq == inclusion; }
};

// Compares the operator order with reverse inclusion of the fixed
// subcategories. Both operators must be idempotent and cohereditary on a
// shared universe (throws PreconditionFailed / UniverseMismatch).
AntitoneResult antitone_check(ClosureOperator const& c1, ClosureOperator const& c2);

// Least R with pred(X/R), computed as the meet of all such R and then
// verified. Throws NotReflective when the meet's quotient fails pred.
Congruence oracle_reflection(FiniteAlgebra const& x, SubcategoryPredicate const& pred);

// Reflector with ρ_X = oracle_reflection(X, pred) on every member.
Reflector oracle_reflector(UniversePtr universe, SubcategoryPredicate const& pred);

}  // namespace epiclo
