#pragma once

// Finitely generated subgroups of ℚ^n of the form L + V, with L generated by
// finitely many vectors over ℤ and V a ℚ-subspace. Cocycle and coboundary
// groups of mixed ℤ/ℚ complexes all have this shape.

#include "dchar/exactalg.hpp"

#include <random>

namespace dchar {

struct MixedGroup {
  std::size_t ambient = 0;
  RatMatrix lattice;   // columns: ℤ-generators
  RatMatrix subspace;  // columns: ℚ-generators

  static MixedGroup zero(std::size_t ambient);
  /// The group ℤ^mask ⊕ ℚ^rest inside ℚ^n.
  static MixedGroup coordinate(const std::vector<bool>& integral);
  bool contains(const RatVec& x) const;
};

/// {x ∈ ℤ^mask ⊕ ℚ^rest : F x = 0}.
MixedGroup mixed_kernel(const RatMatrix& f, const std::vector<bool>& integral);
/// F(ℤ^mask ⊕ ℚ^rest).
MixedGroup mixed_image(const RatMatrix& f, const std::vector<bool>& integral);
/// Image of a subgroup under a linear map.
MixedGroup apply(const RatMatrix& f, const MixedGroup& g);
MixedGroup sum(const MixedGroup& a, const MixedGroup& b);

/// A random element: lattice coefficients in [−2, 2], subspace coefficients
/// in {−1, −5/6, …, 1}.
RatVec random_element(const MixedGroup& g, std::mt19937_64& rng);

/// Isomorphism type of K / I. Requires I ⊆ K; throws DimensionError otherwise.
AbGroupPresentation subquotient(const MixedGroup& k, const MixedGroup& i);

}  // namespace dchar
