#include "coalg/bimodule/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "coalg/error.hpp"

namespace coalg {

FiniteAbelianGroup::FiniteAbelianGroup() : add_{0}, neg_{0}, coords_{IntRow{}} { index_[IntRow{}] = 0; }

FiniteAbelianGroup FiniteAbelianGroup::from_orders(const std::vector<std::int64_t>& orders) {
  FiniteAbelianGroup g;
  g.orders_.clear();
  for (auto o : orders) {
    if (o < 1) throw Error("bad-group", "cyclic orders must be positive");
    if (o > 1) g.orders_.push_back(o);
  }
  std::size_t n = 1;
  for (auto o : g.orders_) n *= static_cast<std::size_t>(o);
  g.size_ = n;
  g.coords_.assign(n, IntRow(g.orders_.size(), 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t x = i;
    for (std::size_t k = g.orders_.size(); k-- > 0;) {
      g.coords_[i][k] = static_cast<std::int64_t>(x % g.orders_[k]);
      x /= g.orders_[k];
    }
  }
  g.index_.clear();
  for (std::size_t i = 0; i < n; ++i) g.index_[g.coords_[i]] = i;
  g.add_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      IntRow c(g.orders_.size());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = (g.coords_[a][k] + g.coords_[b][k]) % g.orders_[k];
      g.add_[a * n + b] = g.index_.at(c);
    }
  g.zero_ = 0;
  g.finish_tables();
  return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_table(std::size_t n, const std::vector<std::size_t>& add) {
  if (n == 0) throw Error("bad-group", "groups are nonempty");
  if (add.size() != n * n) throw Error("bad-group", "addition table needs " + std::to_string(n * n) + " entries");
  for (auto v : add)
    if (v >= n) throw Error("bad-group", "addition leaves the carrier");
  auto op = [&](std::size_t a, std::size_t b) { return add[a * n + b]; };
  std::size_t zero = n;
  for (std::size_t z = 0; z < n && zero == n; ++z) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = op(z, a) == a;
    if (ok) zero = z;
  }
  if (zero == n) throw Error("bad-group", "no additive identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (op(a, b) != op(b, a)) throw Error("bad-group", "addition is not commutative");
      if (op(a, b) == zero) has_inverse = true;
      for (std::size_t c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c))) throw Error("bad-group", "addition is not associative");
    }
    if (!has_inverse) throw Error("bad-group", "missing inverse");
  }

  // Greedy generating set, then the Cayley-graph presentation: one generator
  // per element, relations [0] = 0 and [a] + [g] = [a + g].
  std::vector<std::size_t> gens;
  std::set<std::size_t> span{zero};
  for (std::size_t a = 0; a < n; ++a) {
    if (span.count(a)) continue;
    gens.push_back(a);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::size_t> cur(span.begin(), span.end());
      for (auto x : cur)
        for (auto g : gens)
          if (span.insert(op(x, g)).second) grew = true;
    }
  }
  std::int64_t exponent = 1;
  for (std::size_t a = 0; a < n; ++a) {
    std::int64_t k = 1;
    for (std::size_t x = a; x != zero; x = op(x, a)) ++k;
    exponent = std::lcm(exponent, a == zero ? 1 : k);
  }
  std::vector<IntRow> rels;
  IntRow z(n, 0);
  z[zero] = 1;
  rels.push_back(z);
  for (std::size_t a = 0; a < n; ++a)
    for (auto g : gens) {
      IntRow r(n, 0);
      r[a] += 1;
      r[g] += 1;
      r[op(a, g)] -= 1;
      rels.push_back(std::move(r));
    }
  PresentedGroup pres(n, std::move(rels), exponent);
  if (pres.size() != n) throw Error("bad-group", "decomposition does not match the carrier size");

  FiniteAbelianGroup g;
  g.size_ = n;
  g.zero_ = zero;
  g.add_ = add;
  g.orders_ = pres.orders();
  g.coords_.assign(n, {});
  g.index_.clear();
  for (std::size_t a = 0; a < n; ++a) {
    IntRow unit(n, 0);
    unit[a] = 1;
    g.coords_[a] = pres.reduce(unit);
    if (!g.index_.emplace(g.coords_[a], a).second) throw Error("bad-group", "decomposition is not injective");
  }
  g.finish_tables();
  return g;
}

void FiniteAbelianGroup::finish_tables() {
  neg_.assign(size_, 0);
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b)
      if (add(a, b) == zero_) neg_[a] = b;
  basis_.clear();
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    IntRow c(orders_.size(), 0);
    c[k] = 1;
    basis_.push_back(index_.at(c));
  }
}

std::size_t FiniteAbelianGroup::element(const IntRow& c) const {
  IntRow r(c.size());
  if (c.size() != orders_.size()) throw Error("bad-group", "coordinate vector has the wrong length");
  for (std::size_t k = 0; k < c.size(); ++k) {
    r[k] = c[k] % orders_[k];
    if (r[k] < 0) r[k] += orders_[k];
  }
  return index_.at(r);
}

std::size_t FiniteAbelianGroup::multiple(std::int64_t k, std::size_t a) const {
  IntRow c = coords_[a];
  for (auto& x : c) x *= k;
  return element(c);
}

std::size_t FiniteAbelianGroup::exponent() const {
  std::int64_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return static_cast<std::size_t>(e);
}

std::size_t FiniteAbelianGroup::order_of(std::size_t a) const {
  std::int64_t e = 1;
  for (std::size_t k = 0; k < orders_.size(); ++k) e = std::lcm(e, orders_[k] / std::gcd(orders_[k], coords_[a][k]));
  return static_cast<std::size_t>(e);
}

std::string invariant_string(const std::vector<std::int64_t>& orders) {
  std::vector<std::int64_t> parts;
  for (auto o : orders) {
    for (std::int64_t p = 2; o > 1; ++p) {
      if (o % p) continue;
      std::int64_t q = 1;
      while (o % p == 0) {
        o /= p;
        q *= p;
      }
      parts.push_back(q);
    }
  }
  if (parts.empty()) return "0";
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " x C" : "C") + std::to_string(parts[i]);
  return s;
}

std::string FiniteAbelianGroup::invariant_string() const { return coalg::invariant_string(orders_); }

}  // namespace coalg
