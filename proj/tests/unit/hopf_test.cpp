#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "coalg/hopf/bialgebra.hpp"
#include "coalg/hopf/matrix_comonoid.hpp"

using namespace coalg;
using coalg::test::error_kind;

namespace {

std::set<std::string> names(const FiniteBialgebra& h, const std::vector<std::size_t>& xs) {
  std::set<std::string> out;
  for (auto x : xs) out.insert(h.algebra().name(x));
  return out;
}

/// Group-likes straight from the definition, on pure tensors of the basis.
std::set<std::string> group_like_by_search(const FiniteBialgebra& h) {
  std::set<std::string> out;
  const auto& d = h.delta_table();
  const auto& t = h.tensor();
  for (std::size_t a = 0; a < h.size(); ++a)
    if (d[a] == t.product.pure(a, a) && h.counit_table()[a] == h.ring()->one()) out.insert(h.algebra().name(a));
  return out;
}

}  // namespace

TEST_CASE("algebra tensor products") {
  const auto h = stored_bialgebra("F2C2");
  CHECK(h.tensor().algebra.size() == 16);
  const auto unit = algebra_tensor(h.algebra(), CommAlgebra::base(h.ring()));
  CHECK(unit.algebra.size() == h.size());
}

TEST_CASE("group algebras") {
  const auto f2c2 = stored_bialgebra("F2C2");
  CHECK(f2c2.size() == 4);
  CHECK(names(f2c2, group_like(f2c2)) == std::set<std::string>{"1", "x"});
  CHECK(names(f2c2, primitive(f2c2)) == std::set<std::string>{"0"});
  CHECK(names(f2c2, group_like(f2c2)) == group_like_by_search(f2c2));

  const auto z3c2 = stored_bialgebra("Z3C2");
  CHECK(z3c2.size() == 9);
  CHECK(names(z3c2, group_like(z3c2)) == std::set<std::string>{"1", "g"});

  const auto trivial = stored_bialgebra("Z2C1");
  CHECK(trivial.size() == 2);
  CHECK(names(trivial, group_like(trivial)) == std::set<std::string>{"1"});

  const auto f2c3 = stored_bialgebra("F2C3");
  CHECK(group_like(f2c3).size() == 3);
}

TEST_CASE("truncated polynomial algebras") {
  const auto h = stored_bialgebra("F2x2");
  CHECK(names(h, primitive(h)) == std::set<std::string>{"0", "x"});
  CHECK(names(h, group_like(h)) == std::set<std::string>{"1"});
  CHECK(error_kind([] { truncated_polynomial(builtin_ring("Z3"), 2); }) == "not-a-bialgebra");
}

TEST_CASE("laws and closure of stored bialgebras") {
  for (const auto& name : stored_bialgebra_names()) {
    CAPTURE(name);
    const auto h = stored_bialgebra(name);
    for (const auto& law : h.laws()) CHECK(law.ok);
    const auto c = check_closure(h);
    CHECK(c.submonoid);
    CHECK(c.submodule);
  }
  CHECK(error_kind([] { stored_bialgebra("nosuch"); }) != "");
}

TEST_CASE("abstract G matches the classical formulas") {
  for (const std::string name : {"F2C2", "Z3C2", "F2x2", "Z2C1", "Z3C1"}) {
    CAPTURE(name);
    const auto cmp = gphi_matches_classical(stored_bialgebra(name));
    CHECK(cmp.ok());
  }
  CHECK(error_kind([] { gphi_matches_classical(stored_bialgebra("F2C3")); }) == "cap-exceeded");
}

TEST_CASE("matrix comonoids") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(matrix_comonoid(n).report.ok);
  }
  CHECK(error_kind([] { matrix_comonoid(4); }) == "cap-exceeded");
  const auto m2 = matrix_comonoid(2);
  const auto check = check_induced_monoid(m2, builtin_ring("Z2"));
  CHECK(check.pairs == 256);
  CHECK(check.agreeing == 256);
  CHECK(check.unit_ok);
}
