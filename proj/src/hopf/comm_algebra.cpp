#include "coalg/hopf/comm_algebra.hpp"

#include "coalg/backends/registry.hpp"
#include "coalg/error.hpp"

namespace coalg {

CommAlgebra::CommAlgebra(RingPtr ring, FiniteAbelianGroup group, std::vector<std::size_t> mul_table,
                         std::vector<std::size_t> scalar_table, std::size_t one, std::vector<std::string> names,
                         bool verify)
    : ring_(std::move(ring)),
      group_(std::move(group)),
      mul_(std::move(mul_table)),
      scalar_(std::move(scalar_table)),
      one_(one),
      names_(std::move(names)) {
  const auto n = size();
  if (!ring_->is_commutative()) throw Error("not-commutative", "base ring " + ring_->name() + " is not commutative");
  if (mul_.size() != n * n || scalar_.size() != ring_->size() * n || one_ >= n)
    throw Error("not-an-algebra", "table sizes do not match the carrier");
  if (!names_.empty() && names_.size() != n) throw Error("not-an-algebra", "one name per element required");
  for (auto v : mul_)
    if (v >= n) throw Error("not-an-algebra", "multiplication leaves the carrier");
  if (!verify) return;
  FiniteModule(ring_, Side::Left, group_, scalar_);
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(one_, a) != a) throw Error("not-an-algebra", "one is not a unit");
    for (std::size_t b = 0; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) throw Error("not-an-algebra", "multiplication is not commutative");
      for (std::size_t r = 0; r < ring_->size(); ++r)
        if (mul(scale(r, a), b) != scale(r, mul(a, b)))
          throw Error("not-an-algebra", "scalars do not commute with multiplication");
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error("not-an-algebra", "multiplication is not associative");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) throw Error("not-an-algebra", "distributivity fails");
      }
    }
  }
}

CommAlgebra CommAlgebra::base(const RingPtr& ring) {
  auto group = FiniteAbelianGroup::from_table(ring->size(), ring->add_table());
  std::vector<std::string> names;
  for (std::size_t r = 0; r < ring->size(); ++r) names.push_back(std::to_string(r));
  return CommAlgebra(ring, std::move(group), ring->mul_table(), ring->mul_table(), ring->one(), std::move(names));
}

CommAlgebra CommAlgebra::from_algebra(const RingPtr& ring, const FiniteAlgebra& alg, bool verify) {
  const auto& sig = alg.signature();
  auto group = FiniteAbelianGroup::from_table(alg.size(), alg.table(sig.index_of("plus")));
  std::vector<std::size_t> scalar;
  for (std::size_t r = 0; r < ring->size(); ++r) {
    const auto& t = alg.table(sig.index_of(scalar_op(r)));
    scalar.insert(scalar.end(), t.begin(), t.end());
  }
  return CommAlgebra(ring, std::move(group), alg.table(sig.index_of("times")), std::move(scalar),
                     alg.table(sig.index_of("one"))[0], {}, verify);
}

FiniteAlgebra CommAlgebra::as_algebra() const {
  const auto n = size();
  std::vector<std::vector<std::size_t>> tables;
  tables.push_back(group_.add_table());
  tables.push_back({zero()});
  std::vector<std::size_t> neg_table(n);
  for (std::size_t a = 0; a < n; ++a) neg_table[a] = neg(a);
  tables.push_back(std::move(neg_table));
  tables.push_back(mul_);
  tables.push_back({one_});
  for (std::size_t r = 0; r < ring_->size(); ++r) tables.emplace_back(scalar_.begin() + r * n, scalar_.begin() + (r + 1) * n);
  return FiniteAlgebra(comm_algebra_theory(*ring_).signature, n, std::move(tables));
}

FiniteModule CommAlgebra::module() const { return FiniteModule(ring_, Side::Left, group_, scalar_); }

AlgebraTensor algebra_tensor(const CommAlgebra& a, const CommAlgebra& b) {
  if (!(*a.ring() == *b.ring())) throw Error("ring-mismatch", "algebras over different rings");
  const auto& R = *a.ring();
  std::vector<BalancingPair> balancing;
  for (std::size_t r = 0; r < R.size(); ++r) {
    Table f(a.size()), g(b.size());
    for (std::size_t x = 0; x < a.size(); ++x) f[x] = a.scale(r, x);
    for (std::size_t y = 0; y < b.size(); ++y) g[y] = b.scale(r, y);
    balancing.emplace_back(std::move(f), std::move(g));
  }
  TensorGroup product(a.group(), b.group(), balancing);
  const auto n = product.size();
  const auto& G = product.group();

  // Products of basis tensors, then bilinear extension in coordinates.
  const auto& basis = G.basis();
  const auto k = basis.size();
  std::vector<std::size_t> basis_products(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t acc = G.zero();
      for (const auto& [x1, y1] : product.terms(basis[i]))
        for (const auto& [x2, y2] : product.terms(basis[j]))
          acc = G.add(acc, product.pure(a.mul(x1, x2), b.mul(y1, y2)));
      basis_products[i * k + j] = acc;
    }
  std::vector<std::size_t> mul(n * n);
  for (std::size_t t = 0; t < n; ++t) {
    // Row t: u ↦ t·u is additive, so it is fixed by t·b_j.
    std::vector<std::size_t> times_basis(k);
    const auto& ct = G.coords(t);
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t acc = G.zero();
      for (std::size_t i = 0; i < k; ++i)
        if (ct[i] != 0) acc = G.add(acc, G.multiple(ct[i], basis_products[i * k + j]));
      times_basis[j] = acc;
    }
    for (std::size_t u = 0; u < n; ++u) {
      const auto& cu = G.coords(u);
      std::size_t acc = G.zero();
      for (std::size_t j = 0; j < k; ++j)
        if (cu[j] != 0) acc = G.add(acc, G.multiple(cu[j], times_basis[j]));
      mul[t * n + u] = acc;
    }
  }
  std::vector<std::size_t> scalar(R.size() * n);
  for (std::size_t r = 0; r < R.size(); ++r) {
    auto t = product.induced(G, [&](std::size_t x, std::size_t y) { return product.pure(a.scale(r, x), y); });
    std::copy(t.begin(), t.end(), scalar.begin() + r * n);
  }
  std::vector<std::string> names(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::string s;
    for (const auto& [x, y] : product.terms(t)) s += (s.empty() ? "" : "+") + a.name(x) + "⊗" + b.name(y);
    names[t] = s.empty() ? "0" : s;
  }
  const auto one = product.pure(a.one(), b.one());
  CommAlgebra algebra(a.ring(), G, std::move(mul), std::move(scalar), one, std::move(names), false);
  Table left(a.size()), right(b.size());
  for (std::size_t x = 0; x < a.size(); ++x) left[x] = product.pure(x, b.one());
  for (std::size_t y = 0; y < b.size(); ++y) right[y] = product.pure(a.one(), y);
  return {std::move(product), std::move(algebra), std::move(left), std::move(right)};
}

AlgebraCoproduct algebra_coproduct(const RingPtr& ring, std::span<const CommAlgebra* const> factors) {
  if (factors.empty()) return {CommAlgebra::base(ring), {}};
  AlgebraCoproduct acc{*factors[0], {}};
  Table id(factors[0]->size());
  for (std::size_t a = 0; a < id.size(); ++a) id[a] = a;
  acc.injections.push_back(std::move(id));
  for (std::size_t k = 1; k < factors.size(); ++k) {
    auto t = algebra_tensor(acc.algebra, *factors[k]);
    for (auto& inj : acc.injections)
      for (auto& v : inj) v = t.left[v];
    acc.injections.push_back(t.right);
    acc.algebra = std::move(t.algebra);
  }
  return acc;
}

bool is_algebra_hom(const CommAlgebra& a, const CommAlgebra& b, const Table& f) {
  if (f.size() != a.size() || f[a.one()] != b.one()) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y)
      if (f[a.add(x, y)] != b.add(f[x], f[y]) || f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
    for (std::size_t r = 0; r < a.ring()->size(); ++r)
      if (f[a.scale(r, x)] != b.scale(r, f[x])) return false;
  }
  return true;
}

}  // namespace coalg
