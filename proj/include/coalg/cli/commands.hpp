#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coalg/cli/report.hpp"
#include "coalg/cli/workspace.hpp"

namespace coalg {

/// Verifies the named object: equations of an algebra, preservation for a
/// morphism, dual axioms for a coalgebra, laws for a bialgebra.
Report cmd_check(const Workspace& ws, const std::string& target);

/// G_Φ of a coalgebra.  `phi` may also be `group-like` / `primitive` with a
/// bialgebra, or `invariants` with an (R, R)-bimodule.
Report cmd_gphi(const Workspace& ws, const std::string& phi, const std::string& coalgebra,
                std::optional<std::size_t> bound);

/// V_Φ(X), its dual axioms and, with a bound, X ⊆ G_Φ(V_Φ X).
Report cmd_vphi(const Workspace& ws, const std::string& phi, const std::vector<std::string>& generators,
                std::optional<std::size_t> bound);

/// N_Φ(A), its dual axioms and Ḡ_Φ N_Φ A = A.
Report cmd_nphi(const Workspace& ws, const std::string& phi, const std::string& algebra);

/// Tensor, hom, adjunction and the presentation oracle for a bimodule
/// against test modules.
Report cmd_ew(const Workspace& ws, const std::string& bimodule, const std::vector<std::string>& modules);

/// Laws, group-likes, primitives and the abstract comparison for a
/// bialgebra; `M1`..`M3` name the matrix comonoids.
Report cmd_hopf(const Workspace& ws, const std::string& name);

}  // namespace coalg
