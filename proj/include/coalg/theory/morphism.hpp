#pragma once

#include <map>
#include <optional>
#include <string>

#include "coalg/backends/backend.hpp"
#include "coalg/theory/presentation.hpp"

namespace coalg {

/// Φ: source -> target, sending each source op of arity n to a target term in
/// context n.  The target usually comes with a backend deciding its equations.
struct TheoryMorphism {
  std::string name;
  TheoryPresentation source;
  TheoryPresentation target;
  BackendPtr target_backend;  // may be null
  std::map<std::string, Term> assignment;

  /// Φ(σ); throws unknown-op.
  const Term& image(const std::string& op) const;
};

/// Checks totality and that every image is a target term in the right context.
TheoryMorphism make_morphism(std::string name, TheoryPresentation source, BackendPtr target,
                             std::map<std::string, Term> assignment);
TheoryMorphism make_morphism(std::string name, TheoryPresentation source, TheoryPresentation target,
                             std::map<std::string, Term> assignment);

/// id on the backend's own presentation.
TheoryMorphism identity_morphism(const BackendPtr& backend);

Term translate_term(const TheoryMorphism& phi, const Term& t);

/// psi ∘ phi.
TheoryMorphism compose(const TheoryMorphism& psi, const TheoryMorphism& phi);

struct MorphismValidation {
  bool valid = true;
  std::optional<std::size_t> failing_equation;
  std::string lhs_nf;
  std::string rhs_nf;
};

/// Decides preservation of each source equation by normal forms in the
/// target's free algebra.  Throws no-backend when the target has none.
MorphismValidation validate_theory_morphism(const TheoryMorphism& phi);

}  // namespace coalg
