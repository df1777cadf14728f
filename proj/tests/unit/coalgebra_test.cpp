#include "doctest.h"
#include "helpers.hpp"

#include "coalg/algebra/model_search.hpp"
#include "coalg/backends/registry.hpp"
#include "coalg/coalgebra/canonical.hpp"

using namespace coalg;
using coalg::test::error_kind;
using coalg::test::term;

namespace {

ObjectPtr semilattice() {
  const auto cs = comm_semigroup_backend();
  return CarrierObject::finite(cs, FiniteAlgebra(cs->signature(), 2, {{0, 0, 0, 1}}));
}

ObjectPtr z_mod(std::size_t n, const BackendPtr& b) {
  const auto& sig = b->signature();
  return CarrierObject::finite(b, FiniteAlgebra::from_function(sig, n, [&](std::size_t op, std::span<const std::size_t> a) {
    const auto& name = sig.op(op).name;
    if (name == "plus" || name == "m") return (a[0] + a[1]) % n;
    if (name == "neg") return (n - a[0]) % n;
    return std::size_t{0};
  }));
}

std::string coop_at(const Coalgebra& c, const std::string& op, const Element& a) {
  const auto& h = c.coop(op);
  return h.codomain()->show(h(a));
}

Coalgebra constant_at(const ObjectPtr& s, std::size_t e) {
  const auto cp = copower(s, 2);
  const auto ee = cp.object()->apply(
      "m", std::vector<Element>{cp.injection(0)(Element::index(e)), cp.injection(1)(Element::index(e))});
  return Coalgebra("E", comm_semigroup_backend()->presentation(), s,
                   {{"m", Hom(s, cp.object(), std::vector<Element>(s->size(), ee))}});
}

}  // namespace

TEST_CASE("Kan's cogroup on one generator") {
  const auto v = v_phi(identity_morphism(group_backend()), {"x"});
  const auto x = v.carrier()->generator(0);
  CHECK(coop_at(v, "m", x) == "x'*x''");
  CHECK(coop_at(v, "i", x) == "x^-1");
  CHECK(coop_at(v, "e", x) == "1");
  const auto rep = verify_coalgebra(v);
  CHECK(rep.ok);
  CHECK(rep.equations.size() == 5);
}

TEST_CASE("Kan's comonoid through the forgetful morphism") {
  const auto mon = monoid_backend()->presentation();
  const auto fg = make_morphism("f", mon, group_backend(), {{"m", term("m(x1,x2)")}, {"e", term("e")}});
  const auto v = v_phi(fg, {"x"});
  CHECK(v.coops().size() == 2);
  CHECK(coop_at(v, "m", v.carrier()->generator(0)) == "x'*x''");
  CHECK(verify_coalgebra(v).ok);
}

TEST_CASE("V on no generators is the initial coalgebra") {
  const auto v = v_phi(identity_morphism(group_backend()), {});
  CHECK(v.carrier()->rank() == 0);
  CHECK(verify_coalgebra(v).ok);
}

TEST_CASE("N on abelian groups is the diagonal") {
  const auto ab = abelian_group_backend();
  const auto z2 = z_mod(2, ab);
  const auto n = n_phi(identity_morphism(ab), z2);
  CHECK(verify_coalgebra(n).ok);
  const auto cp = copower(z2, 2);
  const auto one = Element::index(1);
  const auto diag = cp.object()->apply("plus", std::vector<Element>{cp.injection(0)(one), cp.injection(1)(one)});
  CHECK(n.coop("plus")(one) == diag);

  const auto g = g_phi(identity_morphism(ab), n);
  CHECK(g.members.size() == 2);
  REQUIRE(g.subalgebra.has_value());
  CHECK(*g.subalgebra == z2->algebra());
}

TEST_CASE("N through the forgetful cSem to Ab") {
  const auto cs = comm_semigroup_backend()->presentation();
  const auto phi = make_morphism("u", cs, abelian_group_backend(), {{"m", term("plus(x1,x2)")}});
  const auto n = n_phi(phi, z_mod(3, abelian_group_backend()));
  CHECK(verify_coalgebra(n).ok);
  CHECK(g_phi(phi, n).members.size() == 3);
}

TEST_CASE("N is only defined for commutative targets") {
  const auto grp = group_backend();
  const auto c2 = CarrierObject::finite(grp, find_models(grp->presentation(), 2).front());
  CHECK(error_kind([&] { n_phi(identity_morphism(grp), c2); }) == "non-commutative");
}

TEST_CASE("semilattice structures") {
  const auto s = semilattice();
  const auto id = identity_morphism(comm_semigroup_backend());
  const auto n = n_phi(id, s);
  const auto e = constant_at(s, 0);
  CHECK(verify_coalgebra(n).ok);
  CHECK(verify_coalgebra(e).ok);
  CHECK(is_coalgebra_morphism(n, n, Hom::identity(s)));
  CHECK_FALSE(is_coalgebra_morphism(n, e, Hom::identity(s)));

  // The triple diagonal a -> (a, a, a).
  const auto triple = derive_coop(n, term("m(m(x1,x2),x3)"), 3);
  const auto cp3 = copower(s, 3);
  const auto one = Element::index(1);
  const auto aaa = evaluate(*cp3.object(), term("m(m(x1,x2),x3)"),
                            std::vector<Element>{cp3.injection(0)(one), cp3.injection(1)(one), cp3.injection(2)(one)});
  CHECK(triple(one) == aaa);

  // a -> (a, e) is coassociative but not cocommutative.
  const auto cp = copower(s, 2);
  const auto zero = Element::index(0);
  std::vector<Element> images;
  for (std::size_t a = 0; a < 2; ++a)
    images.push_back(cp.object()->apply("m", std::vector<Element>{cp.injection(0)(Element::index(a)), cp.injection(1)(zero)}));
  const Coalgebra skew("skew", comm_semigroup_backend()->presentation(), s, {{"m", Hom(s, cp.object(), images)}});
  const auto rep = verify_coalgebra(skew);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.first_failure() != nullptr);
  CHECK(rep.first_failure()->witness == "1");
}

TEST_CASE("coreflection on small instances") {
  const auto ab = abelian_group_backend();
  const auto id = identity_morphism(ab);
  const auto z2 = z_mod(2, ab);
  const auto r = check_coreflection(id, z2, n_phi(id, z2));
  CHECK(r.ok);
  CHECK(r.coalgebra_homs == 2);
  CHECK(r.algebra_homs == 2);

  const auto cs = comm_semigroup_backend();
  const auto s = semilattice();
  const auto rs = check_coreflection(identity_morphism(cs), s, constant_at(s, 0));
  CHECK(rs.ok);
  CHECK(rs.coalgebra_homs == rs.algebra_homs);
}

TEST_CASE("G of free carriers needs a bound") {
  const auto id = identity_morphism(group_backend());
  const auto v = v_phi(id, {"x", "y"});
  CHECK(error_kind([&] { g_phi(id, v); }) == "bound-required");
  const auto g = g_phi(id, v, 5);
  CHECK(g.bounded);
  CHECK(g.generates);
  CHECK(in_g_phi(id, v, v.carrier()->generator(1)));
  const auto xx = v.carrier()->apply("m", std::vector<Element>{v.carrier()->generator(0), v.carrier()->generator(0)});
  CHECK_FALSE(in_g_phi(id, v, xx));
}

TEST_CASE("bounded enumeration of free elements") {
  const auto mon = CarrierObject::free_on(monoid_backend(), {"a"});
  const auto words = enumerate_free(*mon, 3);
  // 1, a, aa
  CHECK(words.elements.size() == 3);
  CHECK(error_kind([&] { enumerate_free(*mon, 40, 10); }) == "cap-exceeded");
}

TEST_CASE("products of canonical cogroups") {
  const auto id = identity_morphism(group_backend());
  const auto vx = v_phi(id, {"x"});
  const auto vz = v_phi(id, {"z"});
  const auto vxy = v_phi(id, {"x", "y"});
  const auto v0 = v_phi(id, {});
  CHECK(product_of_cogroups(vx, vz).product.carrier()->rank() == 3);
  CHECK(product_of_cogroups(vxy, vz).product.carrier()->rank() == 5);
  const auto p = product_of_cogroups(vx, v0);
  CHECK(p.product.carrier()->rank() == 1);
  CHECK(is_coalgebra_morphism(p.product, vx, p.first));
  CHECK(is_coalgebra_morphism(p.product, v0, p.second));
}
