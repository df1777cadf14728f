#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coalg/backends/object.hpp"
#include "coalg/theory/presentation.hpp"

namespace coalg {

/// An internal coalgebra: a carrier in some variety with, for every n-ary
/// operation σ of the cotheory, a co-operation σ_A : A -> n·A.
class Coalgebra {
 public:
  /// Checks that every operation has a co-operation with domain `carrier`
  /// and codomain the copower n·carrier.
  Coalgebra(std::string name, TheoryPresentation cotheory, ObjectPtr carrier, std::map<std::string, Hom> coops);

  const std::string& name() const { return name_; }
  const TheoryPresentation& cotheory() const { return cotheory_; }
  const ObjectPtr& carrier() const { return carrier_; }
  const VarietyBackend& backend() const { return carrier_->backend(); }
  const Hom& coop(const std::string& op) const;
  const std::map<std::string, Hom>& coops() const { return coops_; }

  /// n·carrier, built once per n.
  const Coproduct& copower(std::size_t n) const;

 private:
  std::string name_;
  TheoryPresentation cotheory_;
  ObjectPtr carrier_;
  std::map<std::string, Hom> coops_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// The dual interpretation t_A : A -> n·A of a cotheory term in context n.
Hom derive_coop(const Coalgebra& c, const Term& t, std::size_t context);

struct EquationCheck {
  std::size_t index = 0;
  std::string equation;
  bool ok = true;
  std::string witness;
  std::string lhs;
  std::string rhs;
};

struct CoalgebraReport {
  bool ok = true;
  std::vector<EquationCheck> equations;
  const EquationCheck* first_failure() const;
};

/// Compares the derived co-operations of both sides of every cotheory
/// equation.
CoalgebraReport verify_coalgebra(const Coalgebra& c);

struct MorphismCheck {
  std::string op;
  bool ok = true;
  std::string witness;
  std::string lhs;
  std::string rhs;
};

struct MorphismReport {
  bool ok = true;
  std::vector<MorphismCheck> ops;
};

/// (n·f) ∘ σ_A = σ_B ∘ f for every σ.
MorphismReport verify_morphism(const Coalgebra& a, const Coalgebra& b, const Hom& f);
bool is_coalgebra_morphism(const Coalgebra& a, const Coalgebra& b, const Hom& f);

}  // namespace coalg
