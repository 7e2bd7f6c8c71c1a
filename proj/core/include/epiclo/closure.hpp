#pragma once

#include "epiclo/congruence.hpp"
#include "epiclo/universe.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace epiclo {

// Result of an exhaustive property check; `witness` is null when it holds.
struct Verdict {
  bool holds = true;
  nlohmann::json witness = nullptr;

  explicit operator bool() const noexcept { return holds; }
  static Verdict pass() { return {}; }
  static Verdict fail(nlohmann::json w) { return {false, std::move(w)}; }
};

// A closure operator on the congruence form over a fixed universe: for each
// member X a map Con(X) -> Con(X), stored extensionally as lattice indices.
// Construction checks extensivity and naturality along every hom between
// members.
class ClosureOperator {
 public:
  using Table = std::vector<std::size_t>;
  using Rule = std::function<Congruence(FiniteAlgebra const&, Congruence const&)>;

  // tables[i][r] = index of C(R) in universe->lattice(i) for R at index r.
  // Throws NotExtensive / NotNatural with a witness.
  static ClosureOperator make(UniversePtr universe, std::vector<Table> tables,
                              std::string name);
  // Wraps a rule into tables. The rule must return congruences on the
  // algebra it is given.
  static ClosureOperator from_rule(UniversePtr universe, Rule const& rule,
                                   std::string name);

  std::string const& name() const noexcept { return name_; }
  UniversePtr const& universe() const noexcept { return universe_; }
  Table const& table(std::size_t member) const { return tables_[member]; }
  std::vector<Table> const& tables() const noexcept { return tables_; }

  std::size_t apply_index(std::size_t member, std::size_t r) const {
    return tables_[member][r];
  }
  Congruence const& apply(std::size_t member, Congruence const& r) const;
  // For any algebra isomorphic to a member; the value is transported along
  // the isomorphism. Throws NotMember.
  Congruence apply(FiniteAlgebra const& x, Congruence const& r) const;

  // Pointwise equality on a shared universe.
  friend bool operator==(ClosureOperator const& a, ClosureOperator const& b) {
    return a.universe_ == b.universe_ && a.tables_ == b.tables_;
  }

 private:
  ClosureOperator(UniversePtr u, std::vector<Table> t, std::string n)
      : universe_(std::move(u)), tables_(std::move(t)), name_(std::move(n)) {}

  UniversePtr universe_;
  std::vector<Table> tables_;
  std::string name_;
};

// C = 1 and C = constant ∇.
ClosureOperator identity_operator(UniversePtr universe);
ClosureOperator top_operator(UniversePtr universe);

Verdict is_extensive(ClosureOperator const& c);
Verdict is_monotone(ClosureOperator const& c);
// Lifting law along every hom between members.
Verdict is_natural(ClosureOperator const& c);
// C(C(R)) = C(R).
Verdict is_idempotent(ClosureOperator const& c);
// C_X(f*S) = f*(C_Y S) for every surjection f: X -> Y.
Verdict is_cohereditary(ClosureOperator const& c);
// C_X(R ∨ S) = C_X(R) ∨ S.
Verdict is_minimal(ClosureOperator const& c);
// f(C_X R) = C_Y(f R) for every surjection f: X -> Y.
Verdict preserves_cocartesian(ClosureOperator const& c);

// Pointwise order C1 ⩽ C2. Throws UniverseMismatch.
Verdict operator_leq(ClosureOperator const& c1, ClosureOperator const& c2);

// Operator with the same values whose fixed objects get the identity
// closure: C_X(R) = R when D(Δ) on X/R is Δ, otherwise the preimage of that
// closure along X -> X/R. Requires a quotient-closed universe and D
// idempotent and cohereditary (throws PreconditionFailed).
ClosureOperator strictify(ClosureOperator const& d);

// Every extensive, natural family of maps on the universe. Throws
// SizeTooLarge when more than `limit` candidate families would be scanned.
std::vector<ClosureOperator> enumerate_closure_operators(UniversePtr universe,
                                                         std::size_t limit = 1'000'000);

// {"name", "extensive", "natural", "idempotent", "cohereditary", "minimal",
//  "preserves_pushouts", "witnesses": {...}}
nlohmann::json operator_report(ClosureOperator const& c);

}  // namespace epiclo
