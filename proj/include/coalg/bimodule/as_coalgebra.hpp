#pragma once

#include <string>

#include "coalg/bimodule/module.hpp"
#include "coalg/coalgebra/coalgebra.hpp"
#include "coalg/theory/morphism.hpp"

namespace coalg {

/// _S M_R as a Mod(R)-coalgebra in Mod(S): plus(m) = ν1 m + ν2 m, zero(m) = 0,
/// neg(m) = -m and s_r(m) = m·r.
Coalgebra bimodule_coalgebra(const Bimodule& m, std::string name = "");

/// Recovers the bimodule from a Mod(R)-coalgebra on a finite left S-module;
/// throws not-a-bimodule when the co-operations do not have that shape.
Bimodule coalgebra_bimodule(const Coalgebra& c, const RingPtr& right_ring);

/// id on Mod(R), read as a morphism into the Mod(R) backend.  With S = R its
/// invariants are {m | r·m = m·r for all r}.
TheoryMorphism module_identity(const RingPtr& ring);

/// [ν_k x ↦ x ⊗ e_k] : n·M -> M ⊗_R R^n is an isomorphism of left S-modules.
bool copower_matches_tensor(const Bimodule& m, std::size_t n);

}  // namespace coalg
