#pragma once

#include <cstddef>
#include <vector>

#include "coalg/algebra/finite_algebra.hpp"

namespace coalg {

/// Every model of `theory` on {0..size-1}, found by backtracking over table
/// cells with early equation checks.  With `up_to_iso`, one representative
/// (the lexicographically least relabelling) per isomorphism class is kept.
/// Intended for the desk-scale regression store: size <= 5.
std::vector<FiniteAlgebra> find_models(const TheoryPresentation& theory, std::size_t size, bool up_to_iso = true);

/// Lexicographically least relabelling of `alg` (over all carrier
/// permutations).  Two algebras are isomorphic iff their canonical forms agree.
FiniteAlgebra canonical_relabelling(const FiniteAlgebra& alg);

}  // namespace coalg
