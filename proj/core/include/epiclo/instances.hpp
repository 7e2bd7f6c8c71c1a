#pragma once

// Concrete closure operators: nilradical on commutative rngs, the
// reachability operator R ∘ ∼_A on quandles, and commutator-style operators
// on groups.

#include "epiclo/closure.hpp"
#include "epiclo/congruence.hpp"
#include "epiclo/reflection.hpp"

#include <vector>

namespace epiclo {

// An ideal of a commutative rng, kept as a sorted element list.
class Ideal {
 public:
  // Throws NotRng, or InvalidInput when `elements` is not an ideal.
  static Ideal make(FiniteAlgebra rng, std::vector<Elem> elements);

  FiniteAlgebra const& rng() const noexcept { return rng_; }
  std::vector<Elem> const& elements() const noexcept { return elements_; }
  bool contains(Elem x) const noexcept;

  friend bool operator==(Ideal const& a, Ideal const& b) {
    return a.elements_ == b.elements_ && a.rng_ == b.rng_;
  }

 private:
  friend Ideal ideal_of_congruence(Congruence const& r);
  friend Ideal nilradical(Ideal const& i);

  Ideal(FiniteAlgebra rng, std::vector<Elem> elements)
      : rng_(std::move(rng)), elements_(std::move(elements)) {}

  FiniteAlgebra rng_;
  std::vector<Elem> elements_;
};

// Block of zero. Throws NotRng.
Ideal ideal_of_congruence(Congruence const& r);
// Additive cosets of I.
Congruence congruence_of_ideal(Ideal const& i);

// √I = {a : a^k ∈ I for some 1 <= k <= |A|}.
Ideal nilradical(Ideal const& i);

// C(R) = congruence of √(ideal of R). Throws NotRng for untagged members.
ClosureOperator nilradical_operator(UniversePtr universe);

// ∼_A: orbits of the maps x -> x ◁ b and x -> x ◁⁻¹ b. Throws NotQuandle,
// or CompositeNotCongruence if the orbit partition is not compatible.
Congruence quandle_reachability(FiniteAlgebra const& q);

// R ∘ ∼_A = {(a, b) : a ∼_A c and c R b for some c}, validated as a
// congruence (throws CompositeNotCongruence otherwise).
Congruence quandle_closure(Congruence const& r);
ClosureOperator quandle_closure_operator(UniversePtr universe);

// γ_G: congruence generated by (xy, yx); its quotient is G/[G,G].
Congruence commutator_congruence(FiniteAlgebra const& g);
// Generated by (xy, yx) and (xx, e); its quotient is G/[G,G]G².
Congruence elementary_abelian2_congruence(FiniteAlgebra const& g);

// C(R) = R ∨ γ_X, and C(R) = R ∨ γ²_X.
ClosureOperator abelianization_operator(UniversePtr universe);
ClosureOperator elementary_abelian2_operator(UniversePtr universe);

// ρ_X = γ_X.
Reflector abelianization_reflector(UniversePtr universe);

// Subcategories given by (quasi-)equations, used as oracles.
SubcategoryPredicate abelian_groups();
SubcategoryPredicate elementary_abelian2_groups();
SubcategoryPredicate reduced_rngs();  // x·x = 0 ⇒ x = 0
SubcategoryPredicate trivial_quandles();

}  // namespace epiclo
