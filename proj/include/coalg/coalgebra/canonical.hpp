#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coalg/coalgebra/coalgebra.hpp"
#include "coalg/theory/morphism.hpp"

namespace coalg {

/// V_Φ(X): the free algebra on X with σ(x) = Φ(σ) evaluated at the n tagged
/// copies of x in n·F(X).
Coalgebra v_phi(const TheoryMorphism& phi, const std::vector<std::string>& generators, std::string name = "");

/// N_Φ(A): σ = Φ(σ)^{n·A} ∘ ⟨ν_1..ν_n⟩.  Throws non-commutative unless the
/// target variety is commutative.
Coalgebra n_phi(const TheoryMorphism& phi, const ObjectPtr& a, std::string name = "");

/// Elements of a free algebra, each with a term of least node count.
struct FreeEnumeration {
  std::vector<Element> elements;
  std::vector<Term> derivations;  // over x1..x_rank
};

/// All elements representable by terms of at most `max_nodes` nodes.
/// Throws cap-exceeded beyond `cap` elements.
FreeEnumeration enumerate_free(const CarrierObject& obj, std::size_t max_nodes, std::size_t cap = 200000);

struct GPhiResult {
  std::vector<Element> members;
  std::size_t examined = 0;
  /// True when the carrier is free and only a truncated part was examined.
  bool bounded = false;
  /// Finite carriers: whether the subset is closed under every operation,
  /// and if so the induced subalgebra on it (members in increasing order).
  bool closed = false;
  std::optional<FiniteAlgebra> subalgebra;
  /// Free carriers: every enumerated element is built from members of G.
  bool generates = false;
};

/// a ∈ G iff σ_A(a) = Φ(σ)^{n·A}(ν_1 a, .., ν_n a) for every σ.
/// Free carriers require `bound` (term node count).
GPhiResult g_phi(const TheoryMorphism& phi, const Coalgebra& c, std::optional<std::size_t> bound = std::nullopt);
bool in_g_phi(const TheoryMorphism& phi, const Coalgebra& c, const Element& a);

struct CoreflectionReport {
  bool ok = true;
  std::size_t coalgebra_homs = 0;  // CoalgHom(N_Φ A, B)
  std::size_t algebra_homs = 0;    // Hom(A, Ḡ_Φ B)
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> bijection;
  std::string failure;
};

/// CoalgHom(N_Φ A, B) ≅ Hom(A, Ḡ_Φ B), both sides enumerated and matched by
/// restriction.
CoreflectionReport check_coreflection(const TheoryMorphism& phi, const ObjectPtr& a, const Coalgebra& b);

/// Every map A -> B of carriers that is a coalgebra morphism.
std::vector<Hom> coalgebra_homs(const Coalgebra& a, const Coalgebra& b);

/// A × B = V(X_A × X_B ⊔ X_A ⊔ X_B) for canonical cogroups, with the two
/// projection candidates.
struct CogroupProduct {
  Coalgebra product;
  Hom first;
  Hom second;
};

CogroupProduct product_of_cogroups(const Coalgebra& a, const Coalgebra& b);

}  // namespace coalg
