#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coalg/algebra/finite_algebra.hpp"
#include "coalg/backends/element.hpp"
#include "coalg/theory/presentation.hpp"

namespace coalg {

/// Result of a backend's finite-coproduct construction: the coproduct algebra
/// and, per factor, the table of its injection.
struct FiniteCoproduct {
  FiniteAlgebra algebra;
  std::vector<std::vector<std::size_t>> injections;
  std::vector<std::string> labels;
};

/// A pair of operations whose commutation square fails, with the two sides in
/// normal form.
struct CommutationWitness {
  std::string first;
  std::string second;
  std::string lhs;
  std::string rhs;
};

/// A variety with decidable word problem: canonical forms for free algebras
/// on finitely many generators, plus (optionally) finite coproducts of finite
/// algebras.
class VarietyBackend {
 public:
  virtual ~VarietyBackend() = default;

  const std::string& name() const { return name_; }
  const TheoryPresentation& presentation() const { return presentation_; }
  const Signature& signature() const { return presentation_.signature; }

  virtual Element free_generator(std::size_t i, std::size_t gens) const = 0;
  virtual Element free_apply(std::size_t op, std::span<const Element> args, std::size_t gens) const = 0;
  /// A term in context `gens` whose value is `e`.
  virtual Term free_to_term(const Element& e, std::size_t gens) const = 0;
  virtual std::string free_show(const Element& e, std::span<const std::string> names) const = 0;

  virtual bool has_finite_coproducts() const { return false; }
  /// Throws capability-unsupported unless overridden.
  virtual FiniteCoproduct finite_coproduct(std::span<const FiniteAlgebra* const> factors) const;

  /// Canonical form of `t` in the free algebra on x1..x_gens.
  Element nf(const Term& t, std::size_t gens) const;

  /// First pair of generating operations whose commutation square fails, if any.
  const std::optional<CommutationWitness>& commutation_witness() const;
  bool is_commutative() const { return !commutation_witness().has_value(); }

  /// Throws not-in-variety if `alg` violates an equation of the presentation.
  void check_member(const FiniteAlgebra& alg) const;

 protected:
  VarietyBackend(std::string name, TheoryPresentation presentation);

 private:
  std::string name_;
  TheoryPresentation presentation_;
  mutable std::once_flag commutation_once_;
  mutable std::optional<CommutationWitness> commutation_;
};

using BackendPtr = std::shared_ptr<const VarietyBackend>;

/// The square of σ (arity n) over τ (arity m) in context n*m:
///   σ(τ(x_11..x_1m), .., τ(x_n1..x_nm)) = τ(σ(x_11..x_n1), .., σ(x_1m..x_nm)).
Equation commutation_square(const OpDecl& sigma, const OpDecl& tau);

/// n-fold product with the injections a -> (unit, .., a, .., unit), where the
/// unit of each factor is its value of the constant `unit_op`.  This is the
/// biproduct in cMon, Ab and module varieties.
FiniteCoproduct biproduct(const Signature& sig, std::span<const FiniteAlgebra* const> factors,
                          const std::string& unit_op);

}  // namespace coalg
