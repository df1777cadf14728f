#include "coalg/bimodule/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "coalg/error.hpp"

namespace coalg {

FiniteRing::FiniteRing(std::string name, std::size_t size, std::vector<std::size_t> add_table,
                       std::vector<std::size_t> mul_table, std::size_t zero, std::size_t one)
    : name_(std::move(name)), size_(size), add_(std::move(add_table)), mul_(std::move(mul_table)), zero_(zero), one_(one) {
  const auto n = size_;
  if (n == 0) throw Error("not-a-ring", "ring carrier must be nonempty");
  if (add_.size() != n * n || mul_.size() != n * n)
    throw Error("not-a-ring", "ring tables need " + std::to_string(n * n) + " entries");
  if (zero_ >= n || one_ >= n) throw Error("not-a-ring", "zero/one outside the carrier");
  for (auto v : add_)
    if (v >= n) throw Error("not-a-ring", "addition leaves the carrier");
  for (auto v : mul_)
    if (v >= n) throw Error("not-a-ring", "multiplication leaves the carrier");
  neg_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (add(zero_, a) != a || add(a, zero_) != a) throw Error("not-a-ring", "zero is not an additive identity");
    if (mul(one_, a) != a || mul(a, one_) != a) throw Error("not-a-ring", "one is not a multiplicative identity");
    for (std::size_t b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) throw Error("not-a-ring", "addition is not commutative");
      if (mul(a, b) != mul(b, a)) commutative_ = false;
      if (add(a, b) == zero_) neg_[a] = b;
      for (std::size_t c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) throw Error("not-a-ring", "addition is not associative");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error("not-a-ring", "multiplication is not associative");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) || mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
          throw Error("not-a-ring", "distributivity fails");
      }
    }
    if (neg_[a] == n) throw Error("not-a-ring", "missing additive inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (std::size_t x = a; x != zero_; x = add(x, a)) ++k;
    exponent_ = std::lcm(exponent_, a == zero_ ? 1 : k);
  }
}

FiniteRing FiniteRing::integers_mod(std::size_t n) {
  std::vector<std::size_t> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = (a * b) % n;
    }
  return FiniteRing("Z" + std::to_string(n), n, std::move(add), std::move(mul), 0, n == 1 ? 0 : 1);
}

FiniteRing FiniteRing::dual_numbers_f2() {
  std::vector<std::size_t> add(16), mul(16);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      std::size_t a = x & 1, b = x >> 1, c = y & 1, d = y >> 1;
      add[x * 4 + y] = ((a ^ c)) | ((b ^ d) << 1);
      // (a + bt)(c + dt) = ac + (ad + bc) t
      mul[x * 4 + y] = (a & c) | ((((a & d) ^ (b & c))) << 1);
    }
  return FiniteRing("F2eps", 4, std::move(add), std::move(mul), 0, 1);
}

FiniteRing FiniteRing::upper_triangular_f2() {
  std::vector<std::size_t> add(64), mul(64);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      std::size_t a = x & 1, b = (x >> 1) & 1, c = x >> 2;
      std::size_t d = y & 1, e = (y >> 1) & 1, f = y >> 2;
      add[x * 8 + y] = x ^ y;
      // [[a,b],[0,c]] [[d,e],[0,f]] = [[ad, ae + bf],[0, cf]]
      std::size_t p = a & d, q = (a & e) ^ (b & f), r = c & f;
      mul[x * 8 + y] = p | (q << 1) | (r << 2);
    }
  return FiniteRing("UT2F2", 8, std::move(add), std::move(mul), 0, 5);
}

std::size_t FiniteRing::from_integer(long long k) const {
  std::size_t acc = zero_;
  const long long m = static_cast<long long>(exponent_);
  long long r = ((k % m) + m) % m;
  for (long long i = 0; i < r; ++i) acc = add(acc, one_);
  return acc;
}

RingHom::RingHom(RingPtr src, RingPtr tgt, std::vector<std::size_t> tab)
    : source(std::move(src)), target(std::move(tgt)), table(std::move(tab)) {
  if (table.size() != source->size()) throw Error("not-a-ring-hom", "table size differs from the source ring");
  for (auto v : table)
    if (v >= target->size()) throw Error("not-a-ring-hom", "table leaves the target ring");
  if (table[source->one()] != target->one()) throw Error("not-a-ring-hom", "one is not preserved");
  for (std::size_t a = 0; a < source->size(); ++a)
    for (std::size_t b = 0; b < source->size(); ++b) {
      if (table[source->add(a, b)] != target->add(table[a], table[b]))
        throw Error("not-a-ring-hom", "addition is not preserved");
      if (table[source->mul(a, b)] != target->mul(table[a], table[b]))
        throw Error("not-a-ring-hom", "multiplication is not preserved");
    }
}

RingHom canonical_projection(const RingPtr& source, const RingPtr& target) {
  std::vector<std::size_t> table(source->size());
  // Walk 0, 1, 1+1, ... in both rings simultaneously.
  std::size_t s = source->zero(), t = target->zero();
  for (std::size_t k = 0; k < source->size(); ++k) {
    table[s] = t;
    s = source->add(s, source->one());
    t = target->add(t, target->one());
  }
  return RingHom(source, target, std::move(table));
}

RingPtr builtin_ring(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, RingPtr> cache;
  const std::string key = name == "F2" ? "Z2" : name;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  RingPtr ring;
  if (key == "F2eps") {
    ring = std::make_shared<const FiniteRing>(FiniteRing::dual_numbers_f2());
  } else if (key == "UT2F2") {
    ring = std::make_shared<const FiniteRing>(FiniteRing::upper_triangular_f2());
  } else if (key.size() > 1 && key[0] == 'Z' &&
             std::all_of(key.begin() + 1, key.end(), [](unsigned char c) { return std::isdigit(c); }) &&
             key.size() <= 4 && key[1] != '0') {
    ring = std::make_shared<const FiniteRing>(FiniteRing::integers_mod(std::stoul(key.substr(1))));
  } else {
    throw Error("unknown-ring", "no builtin ring '" + name + "'");
  }
  cache.emplace(key, ring);
  return ring;
}

}  // namespace coalg
