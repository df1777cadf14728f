#include "coalg/bimodule/smith.hpp"

#include <numeric>
#include <utility>

#include "coalg/error.hpp"

namespace coalg {

std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (r != 0) {
    const auto q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s1, old_s - q * s1);
    old_t = std::exchange(t1, old_t - q * t1);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

namespace {

struct Reducer {
  std::int64_t e;
  std::int64_t operator()(std::int64_t x) const {
    x %= e;
    return x < 0 ? x + e : x;
  }
};

}  // namespace

PresentedGroup::PresentedGroup(std::size_t generators, std::vector<IntRow> relations, std::int64_t exponent)
    : generators_(generators), exponent_(exponent) {
  if (exponent < 1) throw Error("bad-presentation", "exponent must be positive");
  const std::size_t n = generators;
  const Reducer mod{exponent};
  for (auto& row : relations) {
    if (row.size() != n) throw Error("bad-presentation", "relation length differs from generator count");
    for (auto& x : row) x = mod(x);
  }
  // Drop zero rows early; they carry no information.
  std::erase_if(relations, [](const IntRow& r) {
    for (auto x : r)
      if (x != 0) return false;
    return true;
  });
  auto& A = relations;
  const std::size_t rows = A.size();
  std::vector<IntRow> V(n, IntRow(n, 0)), Vinv(n, IntRow(n, 0));
  for (std::size_t i = 0; i < n; ++i) V[i][i] = Vinv[i][i] = 1;

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& r : A) std::swap(r[i], r[j]);
    for (auto& r : V) std::swap(r[i], r[j]);
    std::swap(Vinv[i], Vinv[j]);
  };
  // Columns (i, j) <- (i, j) * [[s, -b/g], [t, a/g]].
  auto combine_cols = [&](std::size_t i, std::size_t j, std::int64_t s, std::int64_t t, std::int64_t bg,
                          std::int64_t ag) {
    auto apply = [&](IntRow& r) {
      const auto x = r[i], y = r[j];
      r[i] = mod(s * x + t * y);
      r[j] = mod(-bg * x + ag * y);
    };
    for (auto& r : A) apply(r);
    for (auto& r : V) apply(r);
    for (std::size_t c = 0; c < n; ++c) {
      const auto x = Vinv[i][c], y = Vinv[j][c];
      Vinv[i][c] = mod(ag * x + bg * y);
      Vinv[j][c] = mod(-t * x + s * y);
    }
  };
  auto combine_rows = [&](std::size_t i, std::size_t j, std::int64_t s, std::int64_t t, std::int64_t bg,
                          std::int64_t ag) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto x = A[i][c], y = A[j][c];
      A[i][c] = mod(s * x + t * y);
      A[j][c] = mod(-bg * x + ag * y);
    }
  };

  std::size_t pivot = 0;
  for (; pivot < std::min(rows, n); ++pivot) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    std::size_t pr = rows, pc = n;
    for (std::size_t r = pivot; r < rows; ++r)
      for (std::size_t c = pivot; c < n; ++c)
        if (A[r][c] != 0 && (pr == rows || A[r][c] < A[pr][pc])) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(A[pr], A[pivot]);
    swap_cols(pc, pivot);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t r = pivot + 1; r < rows; ++r) {
        const auto a = A[pivot][pivot], b = A[r][pivot];
        if (b == 0) continue;
        changed = true;
        if (b % a == 0) {
          const auto q = b / a;
          for (std::size_t c = 0; c < n; ++c) A[r][c] = mod(A[r][c] - q * A[pivot][c]);
          continue;
        }
        std::int64_t s, t;
        const auto g = extended_gcd(a, b, s, t);
        combine_rows(pivot, r, s, t, b / g, a / g);
      }
      for (std::size_t c = pivot + 1; c < n; ++c) {
        const auto a = A[pivot][pivot], b = A[pivot][c];
        if (b == 0) continue;
        changed = true;
        if (b % a == 0) {
          combine_cols(pivot, c, 1, 0, b / a, 1);
          continue;
        }
        std::int64_t s, t;
        const auto g = extended_gcd(a, b, s, t);
        combine_cols(pivot, c, s, t, b / g, a / g);
      }
    }
  }

  for (std::size_t t = 0; t < n; ++t) {
    const std::int64_t d = t < pivot ? A[t][t] : 0;
    const auto order = std::gcd(d, exponent);
    if (order <= 1) continue;
    orders_.push_back(order);
    IntRow rep(n);
    for (std::size_t j = 0; j < n; ++j) rep[j] = Vinv[t][j] % order;
    representatives_.push_back(std::move(rep));
  }
  generator_coords_.assign(n, IntRow(orders_.size(), 0));
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t k = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const std::int64_t d = t < pivot ? A[t][t] : 0;
      const auto order = std::gcd(d, exponent);
      if (order <= 1) continue;
      generator_coords_[j][k++] = V[j][t] % order;
    }
  }
}

std::size_t PresentedGroup::size() const {
  std::size_t s = 1;
  for (auto o : orders_) s *= static_cast<std::size_t>(o);
  return s;
}

IntRow PresentedGroup::reduce(const IntRow& combo) const {
  if (combo.size() != generators_) throw Error("bad-presentation", "combination length differs from generator count");
  IntRow out(orders_.size(), 0);
  for (std::size_t j = 0; j < generators_; ++j) {
    if (combo[j] == 0) continue;
    for (std::size_t t = 0; t < orders_.size(); ++t) out[t] += combo[j] * generator_coords_[j][t];
  }
  for (std::size_t t = 0; t < orders_.size(); ++t) {
    out[t] %= orders_[t];
    if (out[t] < 0) out[t] += orders_[t];
  }
  return out;
}

}  // namespace coalg
