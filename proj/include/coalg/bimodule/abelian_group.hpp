#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coalg/bimodule/smith.hpp"

namespace coalg {

/// A finite abelian group on {0..size-1} together with a decomposition into
/// cyclic factors: every element has coordinates with respect to a basis
/// b_1..b_k of orders o_1..o_k.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup();

  /// Z/o_1 x .. x Z/o_k, elements in mixed radix (first coordinate most
  /// significant).  Orders equal to 1 are dropped.
  static FiniteAbelianGroup from_orders(const std::vector<std::int64_t>& orders);
  /// From an addition table; validates the group axioms and computes the
  /// decomposition from the Cayley-graph presentation.
  static FiniteAbelianGroup from_table(std::size_t size, const std::vector<std::size_t>& add);

  std::size_t size() const { return size_; }
  std::size_t zero() const { return zero_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size_ + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
  std::size_t multiple(std::int64_t k, std::size_t a) const;
  const std::vector<std::size_t>& add_table() const { return add_; }

  const std::vector<std::int64_t>& orders() const { return orders_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const IntRow& coords(std::size_t a) const { return coords_[a]; }
  std::size_t element(const IntRow& coords) const;
  std::size_t exponent() const;
  std::size_t order_of(std::size_t a) const;

  /// Primary decomposition, e.g. "C2 x C4"; "0" for the trivial group.
  std::string invariant_string() const;

  bool operator==(const FiniteAbelianGroup& o) const { return add_ == o.add_; }

 private:
  void finish_tables();

  std::size_t size_ = 1;
  std::size_t zero_ = 0;
  std::vector<std::size_t> add_;
  std::vector<std::size_t> neg_;
  std::vector<std::int64_t> orders_;
  std::vector<std::size_t> basis_;
  std::vector<IntRow> coords_;
  std::map<IntRow, std::size_t> index_;
};

/// The primary decomposition string for a list of cyclic orders.
std::string invariant_string(const std::vector<std::int64_t>& orders);

}  // namespace coalg
