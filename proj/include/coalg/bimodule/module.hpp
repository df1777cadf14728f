#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coalg/algebra/finite_algebra.hpp"
#include "coalg/bimodule/abelian_group.hpp"
#include "coalg/bimodule/ring.hpp"

namespace coalg {

enum class Side { Left, Right };

/// A finite left or right module.  `act(r, m)` is r·m for left modules and
/// m·r for right modules.
class FiniteModule {
 public:
  /// Validates the module axioms exhaustively.
  FiniteModule(RingPtr ring, Side side, FiniteAbelianGroup group, std::vector<std::size_t> action);

  static FiniteModule regular(const RingPtr& ring, Side side = Side::Left);
  static FiniteModule zero(const RingPtr& ring, Side side = Side::Left);
  static FiniteModule from_tables(const RingPtr& ring, Side side, std::size_t size,
                                  const std::vector<std::size_t>& add, std::vector<std::size_t> action);

  const RingPtr& ring() const { return ring_; }
  Side side() const { return side_; }
  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t size() const { return group_.size(); }
  std::size_t add(std::size_t a, std::size_t b) const { return group_.add(a, b); }
  std::size_t act(std::size_t r, std::size_t m) const { return action_[r * size() + m]; }
  const std::vector<std::size_t>& action() const { return action_; }

  /// Left modules as algebras of the Mod(R) variety.
  FiniteAlgebra as_algebra() const;
  static FiniteModule from_algebra(const RingPtr& ring, const FiniteAlgebra& alg);

 private:
  RingPtr ring_;
  Side side_;
  FiniteAbelianGroup group_;
  std::vector<std::size_t> action_;
};

/// _S M_R: `left(s, m)` = s·m, `right(m, r)` = m·r.
class Bimodule {
 public:
  Bimodule(RingPtr left_ring, RingPtr right_ring, FiniteAbelianGroup group, std::vector<std::size_t> left_action,
           std::vector<std::size_t> right_action);

  /// R as an (R, R)-bimodule.
  static Bimodule regular(const RingPtr& ring);
  static Bimodule zero(const RingPtr& left_ring, const RingPtr& right_ring);

  const RingPtr& left_ring() const { return left_ring_; }
  const RingPtr& right_ring() const { return right_ring_; }
  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t size() const { return group_.size(); }
  std::size_t left(std::size_t s, std::size_t m) const { return left_[s * size() + m]; }
  std::size_t right(std::size_t m, std::size_t r) const { return right_[r * size() + m]; }
  const std::vector<std::size_t>& left_action() const { return left_; }
  const std::vector<std::size_t>& right_action() const { return right_; }

  FiniteModule left_module() const;
  FiniteModule right_module() const;

 private:
  RingPtr left_ring_, right_ring_;
  FiniteAbelianGroup group_;
  std::vector<std::size_t> left_, right_;
};

using Table = std::vector<std::size_t>;

/// Calls `visit` with every group homomorphism G -> H (as a table), in
/// lexicographic order of basis images; stops when `visit` returns false.
void for_each_group_hom(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h,
                        const std::function<bool(const Table&)>& visit);

/// Module homomorphisms a -> b (same ring and side), sorted.
std::vector<Table> module_homs(const FiniteModule& a, const FiniteModule& b);
bool is_module_hom(const FiniteModule& a, const FiniteModule& b, const Table& f);

/// (S, R)-bimodule homomorphisms.
std::vector<Table> bimodule_homs(const Bimodule& a, const Bimodule& b);

/// An isomorphism a -> b if one exists.  Invariant factors are compared
/// first; the action is then matched by search over basis images.
std::optional<Table> module_isomorphism(const FiniteModule& a, const FiniteModule& b);
std::optional<Table> bimodule_isomorphism(const Bimodule& a, const Bimodule& b);

/// Module with the same ring and side whose action is the given table on a
/// group; convenience used by constructions that compute actions pointwise.
FiniteModule make_module(const RingPtr& ring, Side side, const FiniteAbelianGroup& group,
                         const std::function<std::size_t(std::size_t r, std::size_t m)>& act);

}  // namespace coalg
