#pragma once

#include <string>

#include "coalg/bimodule/ring.hpp"
#include "coalg/coalgebra/coalgebra.hpp"

namespace coalg {

/// Z[X_ij] in cRing with the comonoid structure representing n×n matrices:
/// m(X_ij) = Σ_k X'_ik X''_kj and e(X_ij) = δ_ij.
struct MatrixComonoid {
  std::size_t n = 0;
  Coalgebra comonoid;
  CoalgebraReport report;
};

/// Throws cap-exceeded for n > 3.
MatrixComonoid matrix_comonoid(std::size_t n);

struct InducedMonoidCheck {
  std::size_t pairs = 0;
  std::size_t agreeing = 0;
  bool unit_ok = true;
  std::string witness;
  bool ok() const { return unit_ok && pairs == agreeing; }
};

/// The monoid on Hom(Z[X_ij], R) induced by the co-operations, f*g = [f,g] ∘ m
/// and unit the composite through e, compared with matrix multiplication and
/// the identity matrix over R on every pair.
InducedMonoidCheck check_induced_monoid(const MatrixComonoid& c, const RingPtr& ring);

/// R as an algebra of the cRing variety.
ObjectPtr ring_as_cring(const RingPtr& ring);

}  // namespace coalg
