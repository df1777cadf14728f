#pragma once

#include <span>
#include <string>
#include <vector>

#include "coalg/bimodule/tensor.hpp"

namespace coalg {

/// A finite commutative R-algebra over a finite commutative ring R.
class CommAlgebra {
 public:
  /// `mul` is n*n row-major, `scalar[r*n + a]` is r·a.  With `verify`, the
  /// commutative algebra axioms are checked exhaustively.
  CommAlgebra(RingPtr ring, FiniteAbelianGroup group, std::vector<std::size_t> mul, std::vector<std::size_t> scalar,
              std::size_t one, std::vector<std::string> names = {}, bool verify = true);

  /// R itself; element labels are ring labels.
  static CommAlgebra base(const RingPtr& ring);
  /// From an algebra over the signature of comm_algebra_theory(R).
  static CommAlgebra from_algebra(const RingPtr& ring, const FiniteAlgebra& alg, bool verify = true);

  const RingPtr& ring() const { return ring_; }
  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t size() const { return group_.size(); }
  std::size_t zero() const { return group_.zero(); }
  std::size_t one() const { return one_; }
  std::size_t add(std::size_t a, std::size_t b) const { return group_.add(a, b); }
  std::size_t neg(std::size_t a) const { return group_.neg(a); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size() + b]; }
  std::size_t scale(std::size_t r, std::size_t a) const { return scalar_[r * size() + a]; }
  /// The structure map R -> A.
  std::size_t unit(std::size_t r) const { return scale(r, one_); }
  const std::vector<std::size_t>& mul_table() const { return mul_; }
  const std::vector<std::size_t>& scalar_table() const { return scalar_; }

  const std::vector<std::string>& names() const { return names_; }
  std::string name(std::size_t a) const { return names_.empty() ? std::to_string(a) : names_[a]; }

  FiniteAlgebra as_algebra() const;
  FiniteModule module() const;

 private:
  RingPtr ring_;
  FiniteAbelianGroup group_;
  std::vector<std::size_t> mul_, scalar_;
  std::size_t one_;
  std::vector<std::string> names_;
};

/// A ⊗_R B with the injections a ↦ a⊗1 and b ↦ 1⊗b.
struct AlgebraTensor {
  TensorGroup product;
  CommAlgebra algebra;
  Table left;
  Table right;
};

AlgebraTensor algebra_tensor(const CommAlgebra& a, const CommAlgebra& b);

/// A_1 ⊗ .. ⊗ A_n, folded from the left; the empty tensor is R.
struct AlgebraCoproduct {
  CommAlgebra algebra;
  std::vector<Table> injections;
};

AlgebraCoproduct algebra_coproduct(const RingPtr& ring, std::span<const CommAlgebra* const> factors);

/// Does `f` preserve +, ·, 1 and scalars?
bool is_algebra_hom(const CommAlgebra& a, const CommAlgebra& b, const Table& f);

}  // namespace coalg
