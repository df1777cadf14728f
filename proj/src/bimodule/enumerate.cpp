#include "coalg/bimodule/enumerate.hpp"

#include <functional>

namespace coalg {

namespace {

std::vector<std::vector<std::int64_t>> partitions(std::int64_t n, std::int64_t max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t k = std::min(n, max_part); k >= 1; --k)
    for (auto rest : partitions(n - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(std::move(rest));
    }
  return out;
}

Table compose_tables(const Table& f, const Table& g) {
  Table h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

}  // namespace

std::vector<std::vector<std::int64_t>> abelian_group_types(std::size_t n) {
  std::vector<std::vector<std::vector<std::int64_t>>> per_prime;
  auto m = static_cast<std::int64_t>(n);
  for (std::int64_t p = 2; m > 1; ++p) {
    std::int64_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e == 0) continue;
    std::vector<std::vector<std::int64_t>> options;
    for (const auto& part : partitions(e, e)) {
      std::vector<std::int64_t> orders;
      for (auto k : part) {
        std::int64_t q = 1;
        for (std::int64_t i = 0; i < k; ++i) q *= p;
        orders.push_back(q);
      }
      options.push_back(std::move(orders));
    }
    per_prime.push_back(std::move(options));
  }
  std::vector<std::vector<std::int64_t>> out{{}};
  for (const auto& options : per_prime) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& prefix : out)
      for (const auto& o : options) {
        auto v = prefix;
        v.insert(v.end(), o.begin(), o.end());
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<std::size_t>> module_actions(const RingPtr& ring, Side side, const FiniteAbelianGroup& group) {
  const auto& R = *ring;
  const auto n = group.size();
  auto rg = FiniteAbelianGroup::from_table(R.size(), R.add_table());
  std::vector<Table> endos;
  for_each_group_hom(group, group, [&](const Table& t) {
    endos.push_back(t);
    return true;
  });
  const auto& basis = rg.basis();
  const auto k = basis.size();
  // Candidate images of each additive basis element of R.
  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t e = 0; e < endos.size(); ++e) {
      bool killed = true;
      for (std::size_t x = 0; x < n && killed; ++x) killed = group.multiple(rg.orders()[i], endos[e][x]) == group.zero();
      if (killed) candidates[i].push_back(e);
    }

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i < k) {
      for (auto e : candidates[i]) {
        pick[i] = e;
        go(i + 1);
      }
      return;
    }
    std::vector<Table> phi(R.size(), Table(n));
    for (std::size_t r = 0; r < R.size(); ++r) {
      const auto& c = rg.coords(r);
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t acc = group.zero();
        for (std::size_t j = 0; j < k; ++j)
          if (c[j] != 0) acc = group.add(acc, group.multiple(c[j], endos[pick[j]][x]));
        phi[r][x] = acc;
      }
    }
    for (std::size_t x = 0; x < n; ++x)
      if (phi[R.one()][x] != x) return;
    for (std::size_t r = 0; r < R.size(); ++r)
      for (std::size_t q = 0; q < R.size(); ++q) {
        const auto expect = side == Side::Left ? compose_tables(phi[r], phi[q]) : compose_tables(phi[q], phi[r]);
        if (phi[R.mul(r, q)] != expect) return;
      }
    std::vector<std::size_t> act;
    act.reserve(R.size() * n);
    for (const auto& t : phi) act.insert(act.end(), t.begin(), t.end());
    out.push_back(std::move(act));
  };
  go(0);
  return out;
}

std::vector<FiniteModule> modules_up_to_iso(const RingPtr& ring, std::size_t max_size, Side side) {
  std::vector<FiniteModule> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const auto& orders : abelian_group_types(n)) {
      auto group = FiniteAbelianGroup::from_orders(orders);
      for (auto& act : module_actions(ring, side, group)) {
        FiniteModule m(ring, side, group, std::move(act));
        bool seen = false;
        for (const auto& k : out)
          if (k.size() == m.size() && module_isomorphism(k, m)) {
            seen = true;
            break;
          }
        if (!seen) out.push_back(std::move(m));
      }
    }
  return out;
}

std::vector<Bimodule> bimodules_up_to_iso(const RingPtr& s, const RingPtr& r, std::size_t max_size) {
  std::vector<Bimodule> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const auto& orders : abelian_group_types(n)) {
      auto group = FiniteAbelianGroup::from_orders(orders);
      const auto lefts = module_actions(s, Side::Left, group);
      const auto rights = module_actions(r, Side::Right, group);
      for (const auto& l : lefts)
        for (const auto& rt : rights) {
          bool commute = true;
          for (std::size_t a = 0; a < s->size() && commute; ++a)
            for (std::size_t b = 0; b < r->size() && commute; ++b)
              for (std::size_t m = 0; m < n && commute; ++m)
                commute = rt[b * n + l[a * n + m]] == l[a * n + rt[b * n + m]];
          if (!commute) continue;
          Bimodule candidate(s, r, group, l, rt);
          bool seen = false;
          for (const auto& k : out)
            if (k.size() == n && bimodule_isomorphism(k, candidate)) {
              seen = true;
              break;
            }
          if (!seen) out.push_back(std::move(candidate));
        }
    }
  return out;
}

}  // namespace coalg
