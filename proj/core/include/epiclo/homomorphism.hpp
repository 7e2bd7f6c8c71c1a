#pragma once

#include "epiclo/algebra.hpp"

#include <optional>
#include <vector>

namespace epiclo {

class Homomorphism {
 public:
  // Validates that `map` preserves every operation. Throws
  // SignatureMismatch, TableShape (wrong length or range), NotHomomorphism.
  Homomorphism(FiniteAlgebra dom, FiniteAlgebra cod, std::vector<Elem> map);

  static Homomorphism identity(FiniteAlgebra const& a);

  FiniteAlgebra const& dom() const noexcept { return dom_; }
  FiniteAlgebra const& cod() const noexcept { return cod_; }
  std::vector<Elem> const& map() const noexcept { return map_; }
  Elem operator()(Elem x) const noexcept { return map_[x]; }
  bool surjective() const noexcept { return surjective_; }
  bool injective() const noexcept;

  // (g ∘ f)(x) = g(f(x)); requires f.cod() == g.dom().
  friend Homomorphism compose(Homomorphism const& g, Homomorphism const& f);
  // Inverse of a bijective hom; throws PreconditionFailed otherwise.
  Homomorphism inverse() const;

  friend bool operator==(Homomorphism const& a, Homomorphism const& b) {
    return a.map_ == b.map_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  struct Trusted {};
  Homomorphism(Trusted, FiniteAlgebra dom, FiniteAlgebra cod,
               std::vector<Elem> map);

  friend std::vector<Homomorphism> enumerate_homs(FiniteAlgebra const&,
                                                  FiniteAlgebra const&);
  friend std::optional<Homomorphism> find_isomorphism(FiniteAlgebra const&,
                                                      FiniteAlgebra const&);

  FiniteAlgebra dom_;
  FiniteAlgebra cod_;
  std::vector<Elem> map_;
  bool surjective_ = false;
};

// All homomorphisms X -> Y in lexicographic order of their maps.
// Throws SignatureMismatch.
std::vector<Homomorphism> enumerate_homs(FiniteAlgebra const& x,
                                         FiniteAlgebra const& y);

std::vector<Homomorphism> enumerate_surjections(FiniteAlgebra const& x,
                                                FiniteAlgebra const& y);

// The first isomorphism X -> Y found by the search, if one exists.
// Deterministic for fixed inputs.
std::optional<Homomorphism> find_isomorphism(FiniteAlgebra const& x,
                                             FiniteAlgebra const& y);

// Same operation names and arities in the same order.
bool same_signature(FiniteAlgebra const& x, FiniteAlgebra const& y) noexcept;

}  // namespace epiclo
