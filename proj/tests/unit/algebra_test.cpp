#include "doctest.h"
#include "helpers.hpp"

#include "coalg/algebra/finite_algebra.hpp"
#include "coalg/algebra/model_search.hpp"
#include "coalg/backends/registry.hpp"

using namespace coalg;
using coalg::test::term;

namespace {

FiniteAlgebra cyclic_add(std::size_t n) {
  return FiniteAlgebra::from_function(Signature({{"m", 2}}), n, [n](std::size_t, std::span<const std::size_t> a) {
    return (a[0] + a[1]) % n;
  });
}

FiniteAlgebra cyclic_monoid(std::size_t n) {
  return FiniteAlgebra::from_function(Signature({{"m", 2}, {"e", 0}}), n,
                                      [n](std::size_t op, std::span<const std::size_t> a) {
                                        return op == 0 ? (a[0] + a[1]) % n : std::size_t{0};
                                      });
}

Equation eq(std::size_t context, const std::string& lhs, const std::string& rhs) {
  return Equation{context, term(lhs), term(rhs)};
}

}  // namespace

TEST_CASE("term evaluation") {
  const auto z3 = cyclic_add(3);
  const std::vector<std::size_t> env{1, 2, 2};
  CHECK(evaluate(z3, term("m(x1,m(x2,x3))"), env) == 2);
  CHECK(evaluate(z3, term("x2"), env) == 2);

  const auto z2 = cyclic_monoid(2);
  const auto constant = interpret_term(term("e"), z2, 1);
  CHECK(constant(std::vector<std::size_t>{1}) == 0);
}

TEST_CASE("satisfaction with witnesses") {
  CHECK(satisfies(cyclic_add(3), eq(2, "m(x1,x2)", "m(x2,x1)")).holds);

  const auto left_zero = FiniteAlgebra(Signature({{"m", 2}}), 2, {{0, 0, 1, 1}});
  const auto res = satisfies(left_zero, eq(2, "m(x1,x2)", "m(x2,x1)"));
  CHECK_FALSE(res.holds);
  CHECK(res.witness == std::vector<std::size_t>{0, 1});

  CHECK(satisfies(left_zero, eq(1, "x1", "x1")).holds);
}

TEST_CASE("homomorphism enumeration") {
  const auto z2 = cyclic_monoid(2);
  const auto homs = enumerate_homs(z2, z2);
  REQUIRE(homs.size() == 2);
  CHECK(homs[0].table == std::vector<std::size_t>{0, 0});
  CHECK(homs[1].table == std::vector<std::size_t>{0, 1});

  CHECK(enumerate_homs(cyclic_monoid(3), terminal_algebra(z2.signature())).size() == 1);

  const auto grp = group_backend()->presentation();
  const auto c2 = find_models(grp, 2);
  const auto c3 = find_models(grp, 3);
  REQUIRE(c2.size() == 1);
  REQUIRE(c3.size() == 1);
  const auto into = enumerate_homs(c2[0], c3[0]);
  REQUIRE(into.size() == 1);
  CHECK(into[0].table[0] == into[0].table[1]);
}

TEST_CASE("products") {
  const auto p = product(cyclic_add(2), cyclic_add(3));
  CHECK(p.algebra.size() == 6);
  CHECK(p.algebra.apply(0, std::vector<std::size_t>{1 * 3 + 2, 1 * 3 + 2}) == 0 * 3 + 1);
  CHECK(is_homomorphism(p.algebra, cyclic_add(2), p.first.table));
  CHECK(is_homomorphism(p.algebra, cyclic_add(3), p.second.table));

  const auto with_point = product(cyclic_add(3), terminal_algebra(Signature({{"m", 2}})));
  CHECK(with_point.algebra.size() == 3);
  CHECK(is_homomorphism(with_point.algebra, cyclic_add(3), with_point.first.table));
}

TEST_CASE("generated subalgebras") {
  const auto z4 = cyclic_monoid(4);
  CHECK(subalgebra_generated(z4, {}) == std::set<std::size_t>{0});
  CHECK(subalgebra_generated(z4, {1}) == std::set<std::size_t>{0, 1, 2, 3});
  CHECK(subalgebra_generated(z4, {2}) == std::set<std::size_t>{0, 2});
  const auto sub = restrict_to(z4, {0, 2});
  CHECK(sub.size() == 2);
  CHECK(sub.apply(0, std::vector<std::size_t>{1, 1}) == 0);
}

TEST_CASE("model counts up to isomorphism") {
  // Groups of order 4: C4 and C2 x C2.  Semigroups of order 2: five.
  CHECK(find_models(group_backend()->presentation(), 4).size() == 2);
  CHECK(find_models(parse_theory("theory Sg ops m/2 eqs m(m(x1,x2),x3)=m(x1,m(x2,x3))"), 2).size() == 5);
}
