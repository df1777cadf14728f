#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "coalg/bimodule/module.hpp"

namespace coalg {

/// An endomorphism of the left factor paired with one of the right factor;
/// the tensor identifies f(m) ⊗ x with m ⊗ g(x).
using BalancingPair = std::pair<Table, Table>;

/// A ⊗ B over the relations given by the balancing pairs, together with the
/// pure-tensor map and, for each element, a list of pure tensors summing to it.
class TensorGroup {
 public:
  TensorGroup(const FiniteAbelianGroup& left, const FiniteAbelianGroup& right,
              const std::vector<BalancingPair>& balancing);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t size() const { return group_.size(); }
  std::size_t left_size() const { return left_size_; }
  std::size_t right_size() const { return right_size_; }
  /// Class of m ⊗ x.
  std::size_t pure(std::size_t m, std::size_t x) const { return pure_[m * right_size_ + x]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& terms(std::size_t t) const { return terms_.at(t); }

  /// The additive map A ⊗ B -> H extending a biadditive, balanced `f`.
  /// Throws not-balanced when `f` does not factor through the tensor.
  Table induced(const FiniteAbelianGroup& target, const std::function<std::size_t(std::size_t, std::size_t)>& f) const;

 private:
  std::size_t left_size_, right_size_;
  FiniteAbelianGroup group_;
  std::vector<std::size_t> pure_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> terms_;
};

/// M ⊗_R X as a left S-module.
struct Tensor {
  TensorGroup product;
  FiniteModule module;
};

/// Throws ring-mismatch unless X is a left module over M's right ring.
Tensor tensor(const Bimodule& m, const FiniteModule& x);

/// Hom_S(M, Y) as a left R-module with (r·f)(m) = f(m·r).
struct HomModule {
  std::vector<Table> maps;  // element i is maps[i]
  FiniteModule module;
  std::size_t index_of(const Table& f) const;
};

HomModule hom_module(const Bimodule& m, const FiniteModule& y);

/// B ⊗_R A for B over (S, R) and A over (R, Q).
struct Composite {
  TensorGroup product;
  Bimodule bimodule;
};

Composite compose_bimodules(const Bimodule& b, const Bimodule& a);

/// |M| ⊗_Z R with unit m ↦ m ⊗ 1.
struct FreeBimodule {
  TensorGroup product;
  Bimodule bimodule;
  Table unit;
};

FreeBimodule free_bimodule(const RingPtr& s, const RingPtr& r, const FiniteModule& m);

/// Every ring element's left and right multiplication on a module, as
/// tables, for building balancing pairs.
std::vector<BalancingPair> scalar_balancing(const Bimodule& m, const FiniteModule& x);

}  // namespace coalg
