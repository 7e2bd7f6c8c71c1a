#pragma once

#include "epiclo/algebra.hpp"
#include "epiclo/universe.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace epiclo {

enum class CorpusKind { groups, rngs, quandles };

std::string_view to_string(CorpusKind k) noexcept;
std::optional<CorpusKind> corpus_kind_from_string(std::string_view s) noexcept;

// Size limits for corpus().
inline constexpr std::size_t kMaxExhaustiveGroupOrder = 6;
inline constexpr std::size_t kMaxGroupOrder = 12;
inline constexpr std::size_t kMaxRngOrder = 24;
inline constexpr std::size_t kMaxQuandleOrder = 6;

// Quotient-closed universe of all algebras of the kind up to max_size:
//   groups    exhaustive Cayley tables up to order 6, the complete list of
//             groups up to order 12 beyond that
//   rngs      Z_1 .. Z_max with mod-n arithmetic
//   quandles  exhaustive tables up to order 6
// Throws SizeTooLarge.
UniversePtr corpus(CorpusKind kind, std::size_t max_size);

FiniteAlgebra cyclic_group(std::size_t n);
FiniteAlgebra zn_rng(std::size_t n);
// Dihedral group of order 2k (symmetries of a k-gon), k >= 3.
FiniteAlgebra dihedral_group(std::size_t k);
FiniteAlgebra quaternion_group();
FiniteAlgebra dicyclic12_group();
FiniteAlgebra alternating4_group();
// Subgroup of S_m generated by permutations of {0..m-1}; elements listed in
// lexicographic order, so the identity is 0.
FiniteAlgebra group_from_permutations(std::vector<std::vector<Elem>> const& generators);
// Componentwise operations on pairs (a, b) encoded as a * |B| + b.
FiniteAlgebra direct_product(FiniteAlgebra const& a, FiniteAlgebra const& b);

FiniteAlgebra trivial_quandle(std::size_t n);
// x ◁ y = 2y - x mod n.
FiniteAlgebra dihedral_quandle(std::size_t n);

// One representative per isomorphism class, in input order.
std::vector<FiniteAlgebra> isomorphism_classes(std::vector<FiniteAlgebra> algebras);

// All groups / quandles of exactly order n up to isomorphism, by
// axiom-pruned table enumeration.
std::vector<FiniteAlgebra> enumerate_groups(std::size_t n);
std::vector<FiniteAlgebra> enumerate_quandles(std::size_t n);

// Every group of order <= max_order (at most 12) from explicit families.
std::vector<FiniteAlgebra> classified_groups(std::size_t max_order);

}  // namespace epiclo
