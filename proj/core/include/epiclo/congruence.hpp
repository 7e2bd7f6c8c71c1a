#pragma once

#include "epiclo/algebra.hpp"
#include "epiclo/homomorphism.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace epiclo {

using ElemPair = std::pair<Elem, Elem>;

// Tuple witnessing that a partition is not compatible with an operation:
// args_a and args_b are componentwise related but their images are not.
struct CompatibilityWitness {
  std::size_t op = 0;
  std::vector<Elem> args_a;
  std::vector<Elem> args_b;
};

// A congruence stored as a canonical block-id array: block ids are assigned
// in order of each block's least element, so two congruences on the same
// algebra are equal exactly when their arrays are equal.
class Congruence {
 public:
  // From any labelling of the carrier (equal labels = same block).
  // Throws TableShape on a length mismatch and NotCongruence when the
  // partition is not compatible with the operations.
  static Congruence from_labels(FiniteAlgebra const& algebra,
                                std::span<Elem const> labels);
  // From an explicit list of blocks that must partition the carrier.
  static Congruence from_blocks(FiniteAlgebra const& algebra,
                                std::vector<std::vector<Elem>> const& blocks);
  // Skips the compatibility check; only for partitions known to be
  // congruences (kernels, generated congruences, joins, meets).
  static Congruence trusted(FiniteAlgebra const& algebra,
                            std::span<Elem const> labels);

  static Congruence identity(FiniteAlgebra const& algebra);  // Δ
  static Congruence total(FiniteAlgebra const& algebra);     // ∇

  FiniteAlgebra const& algebra() const noexcept { return algebra_; }
  std::span<Elem const> labels() const noexcept { return labels_; }
  Elem block_of(Elem x) const noexcept { return labels_[x]; }
  bool related(Elem a, Elem b) const noexcept { return labels_[a] == labels_[b]; }
  std::size_t block_count() const noexcept { return block_count_; }
  std::vector<std::vector<Elem>> blocks() const;
  // Least element of each block, indexed by block id.
  std::vector<Elem> representatives() const;

  bool is_identity() const noexcept { return block_count_ == labels_.size(); }
  bool is_total() const noexcept { return block_count_ == 1; }

  // Fibre order: every block of *this lies inside a block of other.
  // Throws FibreMismatch.
  bool leq(Congruence const& other) const;

  friend bool operator==(Congruence const& a, Congruence const& b) {
    return a.labels_ == b.labels_ && a.algebra_ == b.algebra_;
  }
  // Lexicographic on block arrays (deterministic listing order).
  friend bool operator<(Congruence const& a, Congruence const& b) {
    return a.labels_ < b.labels_;
  }

 private:
  Congruence(FiniteAlgebra algebra, std::vector<Elem> canonical_labels);

  FiniteAlgebra algebra_;
  std::vector<Elem> labels_;
  std::size_t block_count_ = 0;
};

// Relabel so block ids follow least elements: [5,5,2,2] -> [0,0,1,1].
std::vector<Elem> canonical_labels(std::span<Elem const> labels);

// Checks that a partition is compatible with every operation of `algebra`.
std::optional<CompatibilityWitness> find_incompatibility(
    FiniteAlgebra const& algebra, std::span<Elem const> labels);

void require_same_fibre(Congruence const& a, Congruence const& b);

Congruence kernel_congruence(Homomorphism const& f);

struct Quotient {
  FiniteAlgebra algebra;
  Homomorphism projection;
};

// X/R with carrier the block ids of R; the projection has kernel R.
Quotient quotient(FiniteAlgebra const& x, Congruence const& r);

// Least congruence containing `pairs` (union-find with pair propagation).
// Throws OutOfRange for elements outside the carrier.
Congruence generated_congruence(FiniteAlgebra const& x,
                                std::span<ElemPair const> pairs);

Congruence principal_congruence(FiniteAlgebra const& x, Elem a, Elem b);

// Throw FibreMismatch for congruences on different algebras.
Congruence join(Congruence const& r, Congruence const& s);
Congruence meet(Congruence const& r, Congruence const& s);

class CongruenceLattice {
 public:
  explicit CongruenceLattice(FiniteAlgebra algebra,
                             std::vector<Congruence> sorted_elements);

  FiniteAlgebra const& algebra() const noexcept { return algebra_; }
  std::vector<Congruence> const& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Congruence const& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  Congruence const& bottom() const { return elements_[bottom_]; }
  Congruence const& top() const { return elements_[top_]; }
  std::size_t bottom_index() const noexcept { return bottom_; }
  std::size_t top_index() const noexcept { return top_; }

  // Position of r in elements(); throws FibreMismatch when r lives on a
  // different algebra.
  std::size_t index_of(Congruence const& r) const;

 private:
  FiniteAlgebra algebra_;
  std::vector<Congruence> elements_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

// All congruences of X: principal congruences closed under binary joins.
CongruenceLattice con_lattice(FiniteAlgebra const& x);

}  // namespace epiclo
