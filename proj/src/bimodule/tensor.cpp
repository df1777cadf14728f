#include "coalg/bimodule/tensor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "coalg/error.hpp"

namespace coalg {

TensorGroup::TensorGroup(const FiniteAbelianGroup& left, const FiniteAbelianGroup& right,
                         const std::vector<BalancingPair>& balancing)
    : left_size_(left.size()), right_size_(right.size()) {
  const auto& lb = left.basis();
  const auto& rb = right.basis();
  const auto kl = lb.size(), kr = rb.size();
  const auto gens = kl * kr;
  auto gen = [&](std::size_t i, std::size_t j) { return i * kr + j; };
  const auto exponent =
      static_cast<std::int64_t>(std::gcd(left.exponent(), right.exponent()));

  std::vector<IntRow> relations;
  for (std::size_t i = 0; i < kl; ++i)
    for (std::size_t j = 0; j < kr; ++j) {
      IntRow row(gens, 0);
      row[gen(i, j)] = std::gcd(left.orders()[i], right.orders()[j]);
      relations.push_back(std::move(row));
    }
  for (const auto& [f, g] : balancing) {
    for (std::size_t i = 0; i < kl; ++i)
      for (std::size_t j = 0; j < kr; ++j) {
        IntRow row(gens, 0);
        const auto& fc = left.coords(f[lb[i]]);
        for (std::size_t l = 0; l < kl; ++l) row[gen(l, j)] += fc[l];
        const auto& gc = right.coords(g[rb[j]]);
        for (std::size_t l = 0; l < kr; ++l) row[gen(i, l)] -= gc[l];
        relations.push_back(std::move(row));
      }
  }
  PresentedGroup pres(gens, std::move(relations), std::max<std::int64_t>(exponent, 1));
  group_ = FiniteAbelianGroup::from_orders(pres.orders());

  pure_.resize(left_size_ * right_size_);
  for (std::size_t m = 0; m < left_size_; ++m)
    for (std::size_t x = 0; x < right_size_; ++x) {
      IntRow combo(gens, 0);
      const auto& mc = left.coords(m);
      const auto& xc = right.coords(x);
      for (std::size_t i = 0; i < kl; ++i)
        for (std::size_t j = 0; j < kr; ++j) combo[gen(i, j)] = mc[i] * xc[j];
      pure_[m * right_size_ + x] = group_.element(pres.reduce(combo));
    }

  terms_.resize(group_.size());
  for (std::size_t t = 0; t < group_.size(); ++t) {
    IntRow combo(gens, 0);
    const auto& c = group_.coords(t);
    for (std::size_t b = 0; b < c.size(); ++b)
      for (std::size_t g = 0; g < gens; ++g) combo[g] += c[b] * pres.representative(b)[g];
    for (std::size_t i = 0; i < kl; ++i)
      for (std::size_t j = 0; j < kr; ++j) {
        const auto k = combo[gen(i, j)] % exponent;
        if (k != 0) terms_[t].emplace_back(left.multiple(k, lb[i]), rb[j]);
      }
  }
}

Table TensorGroup::induced(const FiniteAbelianGroup& target,
                           const std::function<std::size_t(std::size_t, std::size_t)>& f) const {
  Table out(size());
  for (std::size_t t = 0; t < size(); ++t) {
    std::size_t acc = target.zero();
    for (const auto& [m, x] : terms_[t]) acc = target.add(acc, f(m, x));
    out[t] = acc;
  }
  for (std::size_t m = 0; m < left_size_; ++m)
    for (std::size_t x = 0; x < right_size_; ++x)
      if (out[pure(m, x)] != f(m, x))
        throw Error("not-balanced", "map does not factor through the tensor product");
  return out;
}

std::vector<BalancingPair> scalar_balancing(const Bimodule& m, const FiniteModule& x) {
  std::vector<BalancingPair> pairs;
  const auto& R = *m.right_ring();
  for (std::size_t r = 0; r < R.size(); ++r) {
    Table f(m.size()), g(x.size());
    for (std::size_t a = 0; a < m.size(); ++a) f[a] = m.right(a, r);
    for (std::size_t b = 0; b < x.size(); ++b) g[b] = x.act(r, b);
    pairs.emplace_back(std::move(f), std::move(g));
  }
  return pairs;
}

Tensor tensor(const Bimodule& m, const FiniteModule& x) {
  if (!(*m.right_ring() == *x.ring()) || x.side() != Side::Left)
    throw Error("ring-mismatch", "tensor needs a left module over " + m.right_ring()->name());
  TensorGroup product(m.group(), x.group(), scalar_balancing(m, x));
  const auto& S = m.left_ring();
  std::vector<std::size_t> act(S->size() * product.size());
  for (std::size_t s = 0; s < S->size(); ++s) {
    auto t = product.induced(product.group(), [&](std::size_t a, std::size_t b) { return product.pure(m.left(s, a), b); });
    std::copy(t.begin(), t.end(), act.begin() + s * product.size());
  }
  FiniteModule module(S, Side::Left, product.group(), std::move(act));
  return {std::move(product), std::move(module)};
}

std::size_t HomModule::index_of(const Table& f) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), f);
  if (it == maps.end() || *it != f) throw Error("not-in-hom-module", "map is not S-linear");
  return static_cast<std::size_t>(it - maps.begin());
}

HomModule hom_module(const Bimodule& m, const FiniteModule& y) {
  if (!(*m.left_ring() == *y.ring()) || y.side() != Side::Left)
    throw Error("ring-mismatch", "hom module needs a left module over " + m.left_ring()->name());
  auto maps = module_homs(m.left_module(), y);
  const auto n = maps.size();
  auto index = [&](const Table& f) {
    return static_cast<std::size_t>(std::lower_bound(maps.begin(), maps.end(), f) - maps.begin());
  };
  std::vector<std::size_t> add(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Table h(m.size());
      for (std::size_t a = 0; a < m.size(); ++a) h[a] = y.add(maps[i][a], maps[j][a]);
      add[i * n + j] = index(h);
    }
  const auto& R = m.right_ring();
  std::vector<std::size_t> act(R->size() * n);
  for (std::size_t r = 0; r < R->size(); ++r)
    for (std::size_t i = 0; i < n; ++i) {
      Table h(m.size());
      for (std::size_t a = 0; a < m.size(); ++a) h[a] = maps[i][m.right(a, r)];
      act[r * n + i] = index(h);
    }
  auto module = FiniteModule::from_tables(R, Side::Left, n, add, std::move(act));
  return {std::move(maps), std::move(module)};
}

Composite compose_bimodules(const Bimodule& b, const Bimodule& a) {
  if (!(*b.right_ring() == *a.left_ring()))
    throw Error("ring-mismatch", "middle rings differ: " + b.right_ring()->name() + " vs " + a.left_ring()->name());
  TensorGroup product(b.group(), a.group(), scalar_balancing(b, a.left_module()));
  const auto& S = b.left_ring();
  const auto& Q = a.right_ring();
  const auto n = product.size();
  std::vector<std::size_t> left(S->size() * n), right(Q->size() * n);
  for (std::size_t s = 0; s < S->size(); ++s) {
    auto t = product.induced(product.group(), [&](std::size_t u, std::size_t v) { return product.pure(b.left(s, u), v); });
    std::copy(t.begin(), t.end(), left.begin() + s * n);
  }
  for (std::size_t q = 0; q < Q->size(); ++q) {
    auto t = product.induced(product.group(), [&](std::size_t u, std::size_t v) { return product.pure(u, a.right(v, q)); });
    std::copy(t.begin(), t.end(), right.begin() + q * n);
  }
  Bimodule bimodule(S, Q, product.group(), std::move(left), std::move(right));
  return {std::move(product), std::move(bimodule)};
}

FreeBimodule free_bimodule(const RingPtr& s, const RingPtr& r, const FiniteModule& m) {
  if (!(*m.ring() == *s) || m.side() != Side::Left) throw Error("ring-mismatch", "free bimodule needs a left S-module");
  auto rg = FiniteAbelianGroup::from_table(r->size(), r->add_table());
  TensorGroup product(m.group(), rg, {});
  const auto n = product.size();
  std::vector<std::size_t> left(s->size() * n), right(r->size() * n);
  for (std::size_t a = 0; a < s->size(); ++a) {
    auto t = product.induced(product.group(), [&](std::size_t u, std::size_t v) { return product.pure(m.act(a, u), v); });
    std::copy(t.begin(), t.end(), left.begin() + a * n);
  }
  for (std::size_t q = 0; q < r->size(); ++q) {
    auto t = product.induced(product.group(), [&](std::size_t u, std::size_t v) { return product.pure(u, r->mul(v, q)); });
    std::copy(t.begin(), t.end(), right.begin() + q * n);
  }
  Table unit(m.size());
  for (std::size_t a = 0; a < m.size(); ++a) unit[a] = product.pure(a, r->one());
  Bimodule bimodule(s, r, product.group(), std::move(left), std::move(right));
  return {std::move(product), std::move(bimodule), std::move(unit)};
}

}  // namespace coalg
