#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "coalg/theory/presentation.hpp"

namespace coalg {

/// Finite Σ-algebra on the carrier {0, ..., size-1}.  Each operation of
/// arity k is a row-major table with size^k entries.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  /// Validates totality and range.  An empty carrier is rejected when the
  /// signature has constants.
  FiniteAlgebra(Signature sig, std::size_t size, std::vector<std::vector<std::size_t>> tables);

  /// Builds the tables by evaluating `op(op_index, args)` on every tuple.
  static FiniteAlgebra from_function(
      Signature sig, std::size_t size,
      const std::function<std::size_t(std::size_t, std::span<const std::size_t>)>& op);

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return size_; }
  const std::vector<std::size_t>& table(std::size_t op) const { return tables_.at(op); }
  const std::vector<std::vector<std::size_t>>& tables() const { return tables_; }

  std::size_t apply(std::size_t op, std::span<const std::size_t> args) const;
  std::size_t apply(const std::string& op, std::span<const std::size_t> args) const {
    return apply(sig_.index_of(op), args);
  }

  bool operator==(const FiniteAlgebra&) const = default;

 private:
  Signature sig_;
  std::size_t size_ = 0;
  std::vector<std::vector<std::size_t>> tables_;
};

/// Value of `t` at the assignment x_i = env[i-1].
std::size_t evaluate(const FiniteAlgebra& alg, const Term& t, std::span<const std::size_t> env);

/// The term function t^A : A^n -> A.
std::function<std::size_t(std::span<const std::size_t>)> interpret_term(const Term& t, const FiniteAlgebra& alg,
                                                                          std::size_t context);

struct SatisfactionResult {
  bool holds = true;
  std::vector<std::size_t> witness;  // first failing tuple, lexicographic
};

SatisfactionResult satisfies(const FiniteAlgebra& alg, const Equation& eq);

/// First equation of `theory` that fails, if any.
std::optional<std::pair<std::size_t, SatisfactionResult>> check_theory(const FiniteAlgebra& alg,
                                                                      const TheoryPresentation& theory);

/// A homomorphism given by its table.
struct FiniteHom {
  std::vector<std::size_t> table;
  bool operator==(const FiniteHom&) const = default;
  auto operator<=>(const FiniteHom&) const = default;
};

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const std::size_t> table);

/// All homomorphisms a -> b in lexicographic table order.
std::vector<FiniteHom> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Calls `visit` for each homomorphism in lexicographic order; stops early
/// when `visit` returns false.
void for_each_hom(const FiniteAlgebra& a, const FiniteAlgebra& b,
                  const std::function<bool(std::span<const std::size_t>)>& visit);

struct ProductAlgebra {
  FiniteAlgebra algebra;  // element (i, j) has index i * |b| + j
  FiniteHom first;
  FiniteHom second;
};

ProductAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// The one-element algebra of a signature.
FiniteAlgebra terminal_algebra(const Signature& sig);

/// Least subset containing `seed` and closed under every operation.
std::set<std::size_t> subalgebra_generated(const FiniteAlgebra& alg, const std::set<std::size_t>& seed);

/// Restriction of `alg` to a closed subset, re-indexed in increasing order.
FiniteAlgebra restrict_to(const FiniteAlgebra& alg, const std::set<std::size_t>& closed_subset);

}  // namespace coalg
