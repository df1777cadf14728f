#include <numeric>

#include "doctest.h"
#include "helpers.hpp"

#include "coalg/bimodule/as_coalgebra.hpp"
#include "coalg/bimodule/eilenberg_watts.hpp"
#include "coalg/bimodule/enumerate.hpp"
#include "coalg/bimodule/smith.hpp"
#include "coalg/bimodule/tensor.hpp"
#include "coalg/coalgebra/canonical.hpp"

using namespace coalg;
using coalg::test::error_kind;

namespace {

/// Z/k as a module over Z/n, k | n.
FiniteModule cyclic(const RingPtr& zn, std::size_t k) {
  return make_module(zn, Side::Left, FiniteAbelianGroup::from_orders({static_cast<std::int64_t>(k)}),
                     [k](std::size_t r, std::size_t m) { return r * m % k; });
}

Bimodule cyclic_bimodule(const RingPtr& zn, std::size_t k) {
  const auto g = FiniteAbelianGroup::from_orders({static_cast<std::int64_t>(k)});
  std::vector<std::size_t> act(zn->size() * k);
  for (std::size_t r = 0; r < zn->size(); ++r)
    for (std::size_t m = 0; m < k; ++m) act[r * k + m] = r * m % k;
  return Bimodule(zn, zn, g, act, act);
}

/// |M ⊗_R X| as the number of balanced biadditive maps M × X -> Z/e, where e
/// is a common exponent.  Every such map is fixed by its values on pairs of
/// basis elements; all assignments are tried and the bad ones discarded.
std::size_t tensor_size_by_duality(const Bimodule& m, const FiniteModule& x) {
  const auto& gm = m.group();
  const auto& gx = x.group();
  const std::size_t e = std::lcm(gm.exponent(), gx.exponent());
  const std::size_t bm = gm.basis().size(), bx = gx.basis().size();
  const std::size_t cells = bm * bx;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= e;
  std::size_t count = 0;
  std::vector<std::size_t> beta(cells);
  for (std::size_t code = 0; code < total; ++code) {
    for (std::size_t i = 0, c = code; i < cells; ++i, c /= e) beta[i] = c % e;
    const auto value = [&](std::size_t a, std::size_t b) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < bm; ++i)
        for (std::size_t j = 0; j < bx; ++j) v += gm.coords(a)[i] * gx.coords(b)[j] * beta[i * bx + j];
      return static_cast<std::size_t>(((v % static_cast<std::int64_t>(e)) + e) % e);
    };
    bool ok = true;
    for (std::size_t a = 0; a < m.size() && ok; ++a)
      for (std::size_t b = 0; b < x.size() && ok; ++b) {
        for (std::size_t a2 = 0; a2 < m.size() && ok; ++a2)
          ok = value(gm.add(a, a2), b) == (value(a, b) + value(a2, b)) % e;
        for (std::size_t b2 = 0; b2 < x.size() && ok; ++b2)
          ok = value(a, gx.add(b, b2)) == (value(a, b) + value(a, b2)) % e;
        for (std::size_t r = 0; r < x.ring()->size() && ok; ++r) ok = value(m.right(a, r), b) == value(a, x.act(r, b));
      }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("Smith normal form presentations") {
  const PresentedGroup g(2, {{2, 4}, {0, 6}}, 12);
  // Z^2 / <(2,4), (0,6)> = Z/2 x Z/6
  CHECK(g.size() == 12);
  CHECK(g.orders() == std::vector<std::int64_t>{2, 6});
  const PresentedGroup trivial(1, {{1}}, 12);
  CHECK(trivial.size() == 1);
  std::int64_t s = 0, t = 0;
  CHECK(extended_gcd(12, 18, s, t) == 6);
  CHECK(12 * s + 18 * t == 6);
}

TEST_CASE("finite abelian groups") {
  const auto g = FiniteAbelianGroup::from_orders({4, 2});
  CHECK(g.size() == 8);
  CHECK(g.exponent() == 4);
  CHECK(g.invariant_string() == "C2 x C4");
  CHECK(abelian_group_types(8).size() == 3);
}

TEST_CASE("tensor products against the duality oracle") {
  const auto z4 = builtin_ring("Z4");
  const auto z6 = builtin_ring("Z6");
  CHECK(tensor(cyclic_bimodule(z6, 2), cyclic(z6, 3)).module.size() == 1);
  CHECK(tensor(cyclic_bimodule(z4, 2), cyclic(z4, 2)).module.size() == 2);
  const auto unit = tensor(Bimodule::regular(z4), cyclic(z4, 2));
  CHECK(module_isomorphism(unit.module, cyclic(z4, 2)).has_value());

  for (const auto& ring : {builtin_ring("Z2"), builtin_ring("Z4"), builtin_ring("F2eps")})
    for (const auto& m : bimodules_up_to_iso(ring, ring, 4))
      for (const auto& x : modules_up_to_iso(ring, 4)) {
        CAPTURE(ring->name());
        CHECK(tensor(m, x).module.size() == tensor_size_by_duality(m, x));
      }
}

TEST_CASE("hom modules") {
  const auto z4 = builtin_ring("Z4");
  CHECK(hom_module(cyclic_bimodule(z4, 2), cyclic(z4, 2)).module.size() == 2);
  CHECK(module_homs(cyclic(z4, 2), cyclic(z4, 4)).size() == 2);
  const auto y = cyclic(z4, 4);
  CHECK(module_isomorphism(hom_module(Bimodule::regular(z4), y).module, y).has_value());
}

TEST_CASE("tensor-hom adjunction") {
  const auto z4 = builtin_ring("Z4");
  const auto m = cyclic_bimodule(z4, 2);
  const auto z2 = cyclic(z4, 2);
  const auto a = check_tensor_hom_adjunction(m, z2, z2);
  CHECK(a.ok());
  CHECK(a.bijection.left_count == 2);
  CHECK(a.bijection.right_count == 2);

  const auto zero = FiniteModule::zero(z4);
  const auto b = check_tensor_hom_adjunction(m, zero, z2);
  CHECK(b.ok());
  CHECK(b.bijection.left_count == 1);

  const auto c = check_tensor_hom_adjunction(Bimodule::regular(z4), z2, cyclic(z4, 4));
  CHECK(c.ok());
  CHECK(c.bijection.left_count == module_homs(z2, cyclic(z4, 4)).size());
}

TEST_CASE("left adjoint by presentation") {
  const auto z4 = builtin_ring("Z4");
  const auto m = cyclic_bimodule(z4, 2);
  const auto on_free = left_adjoint_via_presentation(m, FiniteModule::regular(z4));
  CHECK(module_isomorphism(on_free.module, m.left_module()).has_value());
  const auto on_z2 = left_adjoint_via_presentation(m, cyclic(z4, 2));
  CHECK(on_z2.module.size() == 2);
  CHECK(module_isomorphism(on_z2.module, tensor(m, cyclic(z4, 2)).module).has_value());
}

TEST_CASE("composition of bimodules") {
  const auto z4 = builtin_ring("Z4");
  const auto m = cyclic_bimodule(z4, 2);
  CHECK(bimodule_isomorphism(compose_bimodules(m, Bimodule::regular(z4)).bimodule, m).has_value());
  CHECK(compose_bimodules(m, m).bimodule.size() == 2);
  CHECK(compose_bimodules(Bimodule::zero(z4, z4), m).bimodule.size() == 1);
}

TEST_CASE("change of rings along Z4 -> Z2") {
  const auto z4 = builtin_ring("Z4");
  const auto z2 = builtin_ring("Z2");
  const auto f = canonical_projection(z4, z2);
  const auto ext = tensor(extension_bimodule(f), FiniteModule::regular(z4));
  CHECK(ext.module.size() == 2);
  const auto res = restriction(f, FiniteModule::regular(z2));
  CHECK(res.ring() == z4);
  CHECK(res.act(3, 1) == 1);
  CHECK(res.act(2, 1) == 0);
  const auto rep = change_of_rings(f, modules_up_to_iso(z4, 4), modules_up_to_iso(z2, 4));
  CHECK(rep.ok);
  CHECK(rep.bijections > 0);
  CHECK(error_kind([&] { canonical_projection(z4, builtin_ring("Z3")); }) != "");
}

TEST_CASE("cofree and free bimodules") {
  const auto z2 = builtin_ring("Z2");
  const auto c = cofree_bimodule(z2, z2, FiniteModule::regular(z2));
  CHECK(c.bimodule.size() == 2);
  CHECK(cofree_bimodule(z2, z2, FiniteModule::zero(z2)).bimodule.size() == 1);
  CHECK(check_cofree_couniversal(c, FiniteModule::regular(z2), Bimodule::regular(z2)).ok);

  const auto f = free_bimodule(z2, z2, FiniteModule::regular(z2));
  CHECK(f.bimodule.size() == 2);
  CHECK(free_bimodule(z2, z2, FiniteModule::zero(z2)).bimodule.size() == 1);
  for (const auto& p : bimodules_up_to_iso(z2, z2, 4)) CHECK(check_free_universal(f, FiniteModule::regular(z2), p).ok);
}

TEST_CASE("bimodules as coalgebras") {
  const auto ut = builtin_ring("UT2F2");
  const auto m = Bimodule::regular(ut);
  const auto c = bimodule_coalgebra(m);
  CHECK(verify_coalgebra(c).ok);
  const auto g = g_phi(module_identity(ut), c);
  REQUIRE(g.members.size() == 2);
  CHECK(g.members[0].as_index() == ut->zero());
  CHECK(g.members[1].as_index() == ut->one());
  CHECK(coalgebra_bimodule(c, ut).right_action() == m.right_action());
  for (std::size_t n = 0; n <= 2; ++n) CHECK(copower_matches_tensor(m, n));
}
