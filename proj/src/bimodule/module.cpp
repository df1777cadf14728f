#include "coalg/bimodule/module.hpp"

#include <algorithm>
#include <set>

#include "coalg/backends/registry.hpp"
#include "coalg/error.hpp"

namespace coalg {

namespace {

void check_action(const FiniteRing& R, Side side, const FiniteAbelianGroup& G, const std::vector<std::size_t>& act,
                  const char* what) {
  const auto n = G.size();
  if (act.size() != R.size() * n)
    throw Error("not-a-module", std::string(what) + " table needs " + std::to_string(R.size() * n) + " entries");
  for (auto v : act)
    if (v >= n) throw Error("not-a-module", std::string(what) + " table leaves the carrier");
  auto a = [&](std::size_t r, std::size_t m) { return act[r * n + m]; };
  for (std::size_t m = 0; m < n; ++m) {
    if (a(R.one(), m) != m) throw Error("not-a-module", "one does not act as the identity");
    for (std::size_t r = 0; r < R.size(); ++r) {
      for (std::size_t q = 0; q < R.size(); ++q) {
        if (a(R.add(r, q), m) != G.add(a(r, m), a(q, m)))
          throw Error("not-a-module", "action is not additive in the scalar");
        const auto lhs = a(R.mul(r, q), m);
        const auto rhs = side == Side::Left ? a(r, a(q, m)) : a(q, a(r, m));
        if (lhs != rhs) throw Error("not-a-module", "action is not associative");
      }
      for (std::size_t k = 0; k < n; ++k)
        if (a(r, G.add(m, k)) != G.add(a(r, m), a(r, k)))
          throw Error("not-a-module", "action is not additive in the module");
    }
  }
}

std::vector<Table> action_operators(const FiniteRing& R, std::size_t n, const std::vector<std::size_t>& act) {
  std::vector<Table> ops;
  for (std::size_t r = 0; r < R.size(); ++r) ops.emplace_back(act.begin() + r * n, act.begin() + (r + 1) * n);
  return ops;
}

// Backtracking over basis images.  Each operator constraint
// f(op(b_j)) = op'(f(b_j)) is checked once all basis images it mentions are
// fixed.  With `injective`, images keep the span growing by the full order.
void for_each_equivariant(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h, const std::vector<Table>& ops_g,
                          const std::vector<Table>& ops_h, bool injective,
                          const std::function<bool(const Table&)>& visit) {
  const auto& basis = g.basis();
  const auto& orders = g.orders();
  const auto k = basis.size();
  struct Constraint {
    std::size_t op, j;
    IntRow coords;
  };
  std::vector<std::vector<Constraint>> at(k);
  for (std::size_t o = 0; o < ops_g.size(); ++o)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& c = g.coords(ops_g[o][basis[j]]);
      std::size_t last = j;
      for (std::size_t l = 0; l < k; ++l)
        if (c[l] != 0) last = std::max(last, l);
      at[last].push_back({o, j, c});
    }
  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t y = 0; y < h.size(); ++y) {
      const auto ord = h.order_of(y);
      if (injective ? ord == static_cast<std::size_t>(orders[i]) : orders[i] % static_cast<std::int64_t>(ord) == 0)
        candidates[i].push_back(y);
    }
  std::vector<std::size_t> img(k);
  auto combine = [&](const IntRow& c) {
    std::size_t acc = h.zero();
    for (std::size_t l = 0; l < c.size(); ++l)
      if (c[l] != 0) acc = h.add(acc, h.multiple(c[l], img[l]));
    return acc;
  };
  std::vector<std::set<std::size_t>> spans(k + 1);
  spans[0] = {h.zero()};
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (stop) return;
    if (i == k) {
      Table t(g.size());
      for (std::size_t a = 0; a < g.size(); ++a) t[a] = combine(g.coords(a));
      if (!visit(t)) stop = true;
      return;
    }
    for (auto y : candidates[i]) {
      img[i] = y;
      if (injective) {
        std::set<std::size_t> s;
        for (auto x : spans[i]) {
          std::size_t cur = x;
          for (std::int64_t m = 0; m < orders[i]; ++m) {
            s.insert(cur);
            cur = h.add(cur, y);
          }
        }
        if (s.size() != spans[i].size() * static_cast<std::size_t>(orders[i])) continue;
        spans[i + 1] = std::move(s);
      }
      bool ok = true;
      for (const auto& c : at[i]) {
        if (combine(c.coords) != ops_h[c.op][img[c.j]]) {
          ok = false;
          break;
        }
      }
      if (ok) extend(i + 1);
      if (stop) return;
    }
  };
  extend(0);
}

}  // namespace

FiniteModule::FiniteModule(RingPtr ring, Side side, FiniteAbelianGroup group, std::vector<std::size_t> action)
    : ring_(std::move(ring)), side_(side), group_(std::move(group)), action_(std::move(action)) {
  check_action(*ring_, side_, group_, action_, "action");
}

FiniteModule FiniteModule::regular(const RingPtr& ring, Side side) {
  auto g = FiniteAbelianGroup::from_table(ring->size(), ring->add_table());
  std::vector<std::size_t> act(ring->size() * ring->size());
  for (std::size_t r = 0; r < ring->size(); ++r)
    for (std::size_t m = 0; m < ring->size(); ++m) act[r * ring->size() + m] = side == Side::Left ? ring->mul(r, m) : ring->mul(m, r);
  return FiniteModule(ring, side, std::move(g), std::move(act));
}

FiniteModule FiniteModule::zero(const RingPtr& ring, Side side) {
  return FiniteModule(ring, side, FiniteAbelianGroup(), std::vector<std::size_t>(ring->size(), 0));
}

FiniteModule FiniteModule::from_tables(const RingPtr& ring, Side side, std::size_t size,
                                       const std::vector<std::size_t>& add, std::vector<std::size_t> action) {
  return FiniteModule(ring, side, FiniteAbelianGroup::from_table(size, add), std::move(action));
}

FiniteAlgebra FiniteModule::as_algebra() const {
  if (side_ != Side::Left) throw Error("side-mismatch", "only left modules live in the Mod(R) variety");
  const auto n = size();
  std::vector<std::vector<std::size_t>> tables;
  tables.push_back(group_.add_table());
  tables.push_back({group_.zero()});
  std::vector<std::size_t> neg(n);
  for (std::size_t m = 0; m < n; ++m) neg[m] = group_.neg(m);
  tables.push_back(neg);
  for (std::size_t r = 0; r < ring_->size(); ++r) tables.emplace_back(action_.begin() + r * n, action_.begin() + (r + 1) * n);
  return FiniteAlgebra(module_theory(*ring_).signature, n, std::move(tables));
}

FiniteModule FiniteModule::from_algebra(const RingPtr& ring, const FiniteAlgebra& alg) {
  std::vector<std::size_t> act;
  for (std::size_t r = 0; r < ring->size(); ++r) {
    const auto& t = alg.table(alg.signature().index_of(scalar_op(r)));
    act.insert(act.end(), t.begin(), t.end());
  }
  return FiniteModule::from_tables(ring, Side::Left, alg.size(), alg.table(alg.signature().index_of("plus")), act);
}

FiniteModule make_module(const RingPtr& ring, Side side, const FiniteAbelianGroup& group,
                         const std::function<std::size_t(std::size_t, std::size_t)>& act) {
  std::vector<std::size_t> table(ring->size() * group.size());
  for (std::size_t r = 0; r < ring->size(); ++r)
    for (std::size_t m = 0; m < group.size(); ++m) table[r * group.size() + m] = act(r, m);
  return FiniteModule(ring, side, group, std::move(table));
}

Bimodule::Bimodule(RingPtr left_ring, RingPtr right_ring, FiniteAbelianGroup group, std::vector<std::size_t> left_action,
                   std::vector<std::size_t> right_action)
    : left_ring_(std::move(left_ring)),
      right_ring_(std::move(right_ring)),
      group_(std::move(group)),
      left_(std::move(left_action)),
      right_(std::move(right_action)) {
  check_action(*left_ring_, Side::Left, group_, left_, "left action");
  check_action(*right_ring_, Side::Right, group_, right_, "right action");
  for (std::size_t s = 0; s < left_ring_->size(); ++s)
    for (std::size_t r = 0; r < right_ring_->size(); ++r)
      for (std::size_t m = 0; m < size(); ++m)
        if (right(left(s, m), r) != left(s, right(m, r)))
          throw Error("not-a-bimodule", "left and right actions do not commute");
}

Bimodule Bimodule::regular(const RingPtr& ring) {
  auto l = FiniteModule::regular(ring, Side::Left);
  auto r = FiniteModule::regular(ring, Side::Right);
  return Bimodule(ring, ring, l.group(), l.action(), r.action());
}

Bimodule Bimodule::zero(const RingPtr& left_ring, const RingPtr& right_ring) {
  return Bimodule(left_ring, right_ring, FiniteAbelianGroup(), std::vector<std::size_t>(left_ring->size(), 0),
                  std::vector<std::size_t>(right_ring->size(), 0));
}

FiniteModule Bimodule::left_module() const { return FiniteModule(left_ring_, Side::Left, group_, left_); }
FiniteModule Bimodule::right_module() const { return FiniteModule(right_ring_, Side::Right, group_, right_); }

void for_each_group_hom(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h,
                        const std::function<bool(const Table&)>& visit) {
  for_each_equivariant(g, h, {}, {}, false, visit);
}

bool is_module_hom(const FiniteModule& a, const FiniteModule& b, const Table& f) {
  if (f.size() != a.size()) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (f[x] >= b.size()) return false;
    for (std::size_t y = 0; y < a.size(); ++y)
      if (f[a.add(x, y)] != b.add(f[x], f[y])) return false;
    for (std::size_t r = 0; r < a.ring()->size(); ++r)
      if (f[a.act(r, x)] != b.act(r, f[x])) return false;
  }
  return true;
}

std::vector<Table> module_homs(const FiniteModule& a, const FiniteModule& b) {
  if (!(*a.ring() == *b.ring()) || a.side() != b.side()) throw Error("ring-mismatch", "modules over different rings");
  std::vector<Table> out;
  for_each_equivariant(a.group(), b.group(), action_operators(*a.ring(), a.size(), a.action()),
                       action_operators(*b.ring(), b.size(), b.action()), false, [&](const Table& t) {
                         out.push_back(t);
                         return true;
                       });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Table> bimodule_homs(const Bimodule& a, const Bimodule& b) {
  if (!(*a.left_ring() == *b.left_ring()) || !(*a.right_ring() == *b.right_ring()))
    throw Error("ring-mismatch", "bimodules over different rings");
  auto ops_a = action_operators(*a.left_ring(), a.size(), a.left_action());
  auto ops_b = action_operators(*b.left_ring(), b.size(), b.left_action());
  auto ra = action_operators(*a.right_ring(), a.size(), a.right_action());
  auto rb = action_operators(*b.right_ring(), b.size(), b.right_action());
  ops_a.insert(ops_a.end(), ra.begin(), ra.end());
  ops_b.insert(ops_b.end(), rb.begin(), rb.end());
  std::vector<Table> out;
  for_each_equivariant(a.group(), b.group(), ops_a, ops_b, false, [&](const Table& t) {
    out.push_back(t);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Table> module_isomorphism(const FiniteModule& a, const FiniteModule& b) {
  if (!(*a.ring() == *b.ring()) || a.side() != b.side()) throw Error("ring-mismatch", "modules over different rings");
  if (a.size() != b.size() || a.group().invariant_string() != b.group().invariant_string()) return std::nullopt;
  std::optional<Table> found;
  for_each_equivariant(a.group(), b.group(), action_operators(*a.ring(), a.size(), a.action()),
                       action_operators(*b.ring(), b.size(), b.action()), true, [&](const Table& t) {
                         found = t;
                         return false;
                       });
  return found;
}

std::optional<Table> bimodule_isomorphism(const Bimodule& a, const Bimodule& b) {
  if (!(*a.left_ring() == *b.left_ring()) || !(*a.right_ring() == *b.right_ring()))
    throw Error("ring-mismatch", "bimodules over different rings");
  if (a.size() != b.size() || a.group().invariant_string() != b.group().invariant_string()) return std::nullopt;
  auto ops_a = action_operators(*a.left_ring(), a.size(), a.left_action());
  auto ops_b = action_operators(*b.left_ring(), b.size(), b.left_action());
  auto ra = action_operators(*a.right_ring(), a.size(), a.right_action());
  auto rb = action_operators(*b.right_ring(), b.size(), b.right_action());
  ops_a.insert(ops_a.end(), ra.begin(), ra.end());
  ops_b.insert(ops_b.end(), rb.begin(), rb.end());
  std::optional<Table> found;
  for_each_equivariant(a.group(), b.group(), ops_a, ops_b, true, [&](const Table& t) {
    found = t;
    return false;
  });
  return found;
}

}  // namespace coalg
