#pragma once

#include <cstdint>
#include <vector>

namespace coalg {

using IntRow = std::vector<std::int64_t>;

/// The abelian group ⟨g_1..g_n | relations⟩ in which every generator is known
/// to have order dividing `exponent`, brought to cyclic normal form.
///
/// Diagonalization runs over Z/exponent: since exponent·g_j = 0 for every j,
/// reducing entries mod the exponent does not change the group.  Unimodular
/// column operations are tracked in V and V^{-1}; generator j has normal
/// coordinates row j of V, and basis vector t is represented by row t of
/// V^{-1}.
class PresentedGroup {
 public:
  PresentedGroup(std::size_t generators, std::vector<IntRow> relations, std::int64_t exponent);

  std::size_t generator_count() const { return generators_; }
  /// Orders of the nontrivial cyclic coordinates.
  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t size() const;

  /// Normal coordinates of the class of Σ combo_j g_j.
  IntRow reduce(const IntRow& combo) const;
  /// A generator combination representing basis coordinate t.
  const IntRow& representative(std::size_t t) const { return representatives_.at(t); }

 private:
  std::size_t generators_;
  std::int64_t exponent_;
  std::vector<std::int64_t> orders_;
  std::vector<IntRow> generator_coords_;  // generators x kept coordinates
  std::vector<IntRow> representatives_;   // kept coordinates x generators
};

/// Extended gcd: returns g >= 0 with s*a + t*b = g.
std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t);

}  // namespace coalg
