#pragma once

#include "epiclo/congruence.hpp"
#include "epiclo/corpus.hpp"
#include "epiclo/homomorphism.hpp"

#include <vector>

namespace fx {

using namespace epiclo;

inline Congruence cong(FiniteAlgebra const& a, std::vector<std::vector<Elem>> const& blocks) {
  return Congruence::from_blocks(a, blocks);
}

// x -> x mod m from Z_n to Z_m as groups.
inline Homomorphism mod_hom(std::size_t n, std::size_t m) {
  std::vector<Elem> map(n);
  for (Elem x = 0; x < n; ++x) map[x] = static_cast<Elem>(x % m);
  return Homomorphism(cyclic_group(n), cyclic_group(m), map);
}

inline FiniteAlgebra s3() { return dihedral_group(3); }

// In lexicographic permutation order the even permutations of S3 are 0, 3, 4.
inline Congruence s3_a3(FiniteAlgebra const& s3) { return cong(s3, {{0, 3, 4}, {1, 2, 5}}); }

}  // namespace fx
