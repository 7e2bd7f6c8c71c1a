#pragma once

#include "epiclo/congruence.hpp"
#include "epiclo/homomorphism.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace epiclo {

// A hom between two members together with its action on fibres:
// pullback[s] is the lattice index of f*(S) for S = lattice(cod)[s].
struct MemberHom {
  std::size_t dom = 0;
  std::size_t cod = 0;
  Homomorphism hom;
  std::vector<std::size_t> pullback;
};

// Where X/R lands in the universe: member `target` and the surjection
// X -> target whose kernel is R.
struct QuotientLink {
  std::size_t target = 0;
  Homomorphism surjection;
};

class Universe;
using UniversePtr = std::shared_ptr<Universe const>;

// A finite set of algebras, one per isomorphism class, standing in for the
// base category. All homs between members are enumerated up front.
class Universe {
 public:
  enum class Closure { none, quotient_closed };

  // Deduplicates up to isomorphism and sorts members by size, then tables.
  // With Closure::quotient_closed every quotient of every member must be
  // isomorphic to a member (throws UniverseNotQuotientClosed otherwise).
  static UniversePtr make(std::vector<FiniteAlgebra> algebras, Closure closure,
                          std::string name = "universe");

  // Adds every quotient of every algebra, then builds a quotient-closed
  // universe.
  static UniversePtr quotient_closure(std::vector<FiniteAlgebra> algebras,
                                      std::string name = "universe");

  std::string const& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool quotient_closed() const noexcept { return quotient_closed_; }

  FiniteAlgebra const& algebra(std::size_t i) const { return members_[i].algebra; }
  CongruenceLattice const& lattice(std::size_t i) const { return members_[i].lattice; }
  // Stable identifier "<name>-<size>-<k>" (k counts members of that size).
  std::string const& id(std::size_t i) const { return members_[i].id; }

  // Every hom between members, grouped by domain then codomain.
  std::vector<MemberHom> const& homs() const noexcept { return homs_; }
  std::vector<MemberHom const*> surjections() const;

  struct Location {
    std::size_t index;
    Homomorphism iso;  // algebra -> member
  };
  // Member isomorphic to `x` (same tag), if any.
  std::optional<Location> locate(FiniteAlgebra const& x) const;
  Location require_member(FiniteAlgebra const& x) const;  // throws NotMember
  std::optional<std::size_t> index_of(FiniteAlgebra const& x) const;

  // Only available on quotient-closed universes.
  QuotientLink const& quotient_link(std::size_t member, std::size_t congruence) const;

 private:
  struct Member {
    FiniteAlgebra algebra;
    CongruenceLattice lattice;
    std::string id;
    std::vector<std::size_t> invariant;
    std::vector<QuotientLink> quotients;
  };

  Universe() = default;

  std::string name_;
  bool quotient_closed_ = false;
  std::vector<Member> members_;
  std::vector<MemberHom> homs_;
};

// Cheap isomorphism invariant used to prune isomorphism searches.
std::vector<std::size_t> iso_invariant(FiniteAlgebra const& x);

// Moves a congruence along an isomorphism iso: A -> B.
Congruence transport(Homomorphism const& iso, Congruence const& r);

}  // namespace epiclo
