#pragma once

// The form of quotients, presented by congruences: the fibre over an algebra
// X is Con(X) ordered by inclusion, and a hom f: X -> Y lifts to R -> S when
// f maps R-related pairs to S-related pairs.

#include "epiclo/congruence.hpp"
#include "epiclo/homomorphism.hpp"

namespace epiclo {

// True iff (a, b) in R implies (f a, f b) in S. Throws FibreMismatch when R
// is not on dom(f) or S is not on cod(f).
bool lifts(Homomorphism const& f, Congruence const& r, Congruence const& s);

// Cartesian lifting: a ≡ b iff f(a) S f(b). The largest R lifting to S.
Congruence preimage_congruence(Homomorphism const& f, Congruence const& s);

// Cocartesian lifting (pushout of X -> X/R along f): the least congruence on
// cod(f) containing f(R). Throws NotInE when f is not surjective.
Congruence image_congruence(Homomorphism const& f, Congruence const& r);

// For the domain functor on surjections, the right universalizers are
// exactly the surjective homs.
bool right_universalizer_check(Homomorphism const& f) noexcept;

}  // namespace epiclo
