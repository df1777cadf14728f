#include "doctest.h"
#include "helpers.hpp"

#include "coalg/backends/object.hpp"
#include "coalg/backends/registry.hpp"

using namespace coalg;
using coalg::test::error_kind;
using coalg::test::term;

namespace {

std::string normal_form(const BackendPtr& b, std::vector<std::string> gens, const std::string& t) {
  const auto obj = CarrierObject::free_on(b, gens);
  std::vector<Element> env;
  for (std::size_t i = 0; i < gens.size(); ++i) env.push_back(obj->generator(i));
  return obj->show(evaluate(*obj, term(t), env));
}

ObjectPtr cyclic_ab(std::size_t n) {
  const auto b = abelian_group_backend();
  const auto& sig = b->signature();
  auto alg = FiniteAlgebra::from_function(sig, n, [&](std::size_t op, std::span<const std::size_t> a) -> std::size_t {
    const auto& name = sig.op(op).name;
    if (name == "plus") return (a[0] + a[1]) % n;
    if (name == "neg") return (n - a[0]) % n;
    return 0;
  });
  return CarrierObject::finite(b, alg);
}

Hom times(const ObjectPtr& a, std::size_t k) {
  std::vector<Element> images;
  for (std::size_t i = 0; i < a->size(); ++i) images.push_back(Element::index(i * k % a->size()));
  return Hom::checked(a, a, images);
}

}  // namespace

TEST_CASE("normal forms in free algebras") {
  CHECK(normal_form(group_backend(), {"a", "b"}, "m(m(x1,i(x1)),x2)") == "b");
  CHECK(normal_form(abelian_group_backend(), {"a", "b"}, "plus(plus(x1,x2),plus(x1,neg(x1)))") == "a+b");
  CHECK(normal_form(comm_ring_backend(), {"x", "y"}, "times(plus(x1,x2),plus(x1,neg(x2)))") == "x^2-y^2");
  CHECK(normal_form(monoid_backend(), {"a", "b"}, "m(x1,m(x2,x1))") == "aba");
  const auto ab = CarrierObject::free_on(monoid_backend(), {"a", "b"});
  CHECK(ab->show(ab->generator(0)) == "a");
}

TEST_CASE("commutativity classification") {
  CHECK(abelian_group_backend()->is_commutative());
  CHECK(comm_monoid_backend()->is_commutative());
  CHECK(comm_semigroup_backend()->is_commutative());
  CHECK(module_backend(builtin_ring("Z4"))->is_commutative());
  CHECK_FALSE(group_backend()->is_commutative());
  CHECK_FALSE(monoid_backend()->is_commutative());
  CHECK(error_kind([] { backend_by_name("Lattice"); }) == "unknown-backend");
}

TEST_CASE("finite coproducts") {
  const auto z2 = cyclic_ab(2);
  const auto z3 = cyclic_ab(3);
  const auto sum = coproduct(abelian_group_backend(), {z2, z3});
  CHECK(sum.object()->size() == 6);

  const auto cs = comm_semigroup_backend();
  const auto point = CarrierObject::finite(cs, FiniteAlgebra(cs->signature(), 1, {{0}}));
  CHECK(coproduct(cs, {point, point}).object()->size() == 3);

  const auto fx = CarrierObject::free_on(group_backend(), {"x"});
  const auto free_sum = copower(fx, 2);
  CHECK(free_sum.object()->is_free());
  CHECK(free_sum.object()->rank() == 2);
}

TEST_CASE("copairing") {
  const auto z6 = cyclic_ab(6);
  const auto cp = copower(z6, 2);
  const std::vector<Hom> parts{times(z6, 2), times(z6, 3)};
  const auto f = copair(cp, parts, z6);
  const auto one = Element::index(1);
  const auto both = cp.object()->apply("plus", std::vector<Element>{cp.injection(0)(one), cp.injection(1)(one)});
  CHECK(f(both) == Element::index(5));

  const std::vector<Hom> ids{Hom::identity(z6), Hom::identity(z6)};
  const auto codiagonal = copair(cp, ids, z6);
  CHECK(hom_equal(compose(codiagonal, cp.injection(1)), Hom::identity(z6)).equal);

  const auto fx = CarrierObject::free_on(group_backend(), {"x"});
  const auto gp = copower(fx, 2);
  const auto x = fx->generator(0);
  const auto square = fx->apply("m", std::vector<Element>{x, x});
  const std::vector<Hom> homs{Hom(fx, fx, {square}), Hom::identity(fx)};
  const auto g = copair(gp, homs, fx);
  CHECK(g(gp.injection(0)(x)) == square);
}

TEST_CASE("homomorphisms and their comparison") {
  const auto words = CarrierObject::free_on(monoid_backend(), {"a", "b"});
  const auto a = words->generator(0);
  const auto b = words->generator(1);
  const auto bb = words->apply("m", std::vector<Element>{b, b});
  const Hom f(words, words, {bb, b});
  CHECK(words->show(f(words->apply("m", std::vector<Element>{a, a}))) == "bbbb");

  const auto ints = CarrierObject::free_on(abelian_group_backend(), {"a"});
  const auto x = ints->generator(0);
  const auto twice = ints->apply("plus", std::vector<Element>{x, x});
  const auto thrice = ints->apply("plus", std::vector<Element>{twice, x});
  CHECK(ints->show(Hom(ints, ints, {twice})(thrice)) == "6*a");

  const auto grp = CarrierObject::free_on(group_backend(), {"x", "y"});
  const auto gx = grp->generator(0);
  const auto gy = grp->generator(1);
  const auto detour = evaluate(*grp, term("m(m(x1,i(x1)),x2)"), std::vector<Element>{gx, gy});
  CHECK(hom_equal(Hom(grp, grp, {detour, gy}), Hom(grp, grp, {gy, gy})).equal);

  const auto z3 = cyclic_ab(3);
  const auto diff = hom_equal(times(z3, 1), times(z3, 2));
  CHECK_FALSE(diff.equal);
  CHECK(diff.witness.has_value());
  CHECK(error_kind([&] { Hom::checked(z3, z3, {Element::index(1), Element::index(1), Element::index(1)}); }) ==
        "not-a-hom");
}
