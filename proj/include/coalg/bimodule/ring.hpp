#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "coalg/algebra/finite_algebra.hpp"

namespace coalg {

/// A finite unital ring on {0..size-1}.  Ring axioms are checked
/// exhaustively at construction.
class FiniteRing {
 public:
  FiniteRing(std::string name, std::size_t size, std::vector<std::size_t> add, std::vector<std::size_t> mul,
             std::size_t zero, std::size_t one);

  /// Z/n with the usual labels 0..n-1.
  static FiniteRing integers_mod(std::size_t n);
  /// F2[t]/(t^2): element a + b t has label a + 2b.
  static FiniteRing dual_numbers_f2();
  /// Upper triangular 2x2 matrices over F2: [[a,b],[0,c]] has label a + 2b + 4c.
  static FiniteRing upper_triangular_f2();

  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }
  std::size_t zero() const { return zero_; }
  std::size_t one() const { return one_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size_ + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
  bool is_commutative() const { return commutative_; }
  /// Additive order of the identity's group: the exponent of (R, +).
  std::size_t additive_exponent() const { return exponent_; }
  /// Image of the integer k under Z -> R.
  std::size_t from_integer(long long k) const;

  const std::vector<std::size_t>& add_table() const { return add_; }
  const std::vector<std::size_t>& mul_table() const { return mul_; }

  bool operator==(const FiniteRing& other) const {
    return size_ == other.size_ && add_ == other.add_ && mul_ == other.mul_ && zero_ == other.zero_ &&
           one_ == other.one_;
  }

 private:
  std::string name_;
  std::size_t size_;
  std::vector<std::size_t> add_, mul_, neg_;
  std::size_t zero_, one_;
  bool commutative_ = true;
  std::size_t exponent_ = 1;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// A ring homomorphism given by its table; validated on construction.
struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<std::size_t> table;

  RingHom(RingPtr source, RingPtr target, std::vector<std::size_t> table);
  std::size_t operator()(std::size_t r) const { return table[r]; }
};

/// The canonical projection Z/n -> Z/m for m | n.
RingHom canonical_projection(const RingPtr& source, const RingPtr& target);

/// `Z<n>` (n >= 1), `F2` (= Z2), `F2eps`, `UT2F2`; shared instances.  Throws unknown-ring.
RingPtr builtin_ring(const std::string& name);

}  // namespace coalg
