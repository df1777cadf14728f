#include "doctest.h"
#include "helpers.hpp"

#include "coalg/backends/registry.hpp"
#include "coalg/theory/morphism.hpp"

using namespace coalg;
using coalg::test::error_kind;
using coalg::test::term;

TEST_CASE("parse a monoid presentation") {
  const auto th = parse_theory("theory Mon ops m/2 e/0 eqs m(m(x1,x2),x3)=m(x1,m(x2,x3)); m(e,x1)=x1; m(x1,e)=x1");
  CHECK(th.name == "Mon");
  CHECK(th.signature.size() == 2);
  CHECK(th.signature.arity("m") == 2);
  CHECK(th.signature.arity("e") == 0);
  CHECK(th.equations.size() == 3);
  CHECK(th.equations[0].context == 3);
}

TEST_CASE("empty theory") {
  const auto th = parse_theory("theory Triv ops eqs");
  CHECK(th.signature.size() == 0);
  CHECK(th.equations.empty());
}

TEST_CASE("arity mismatch is reported") {
  CHECK(error_kind([] { parse_theory("theory Bad ops m/2 eqs m(x1)=x1"); }) == "arity-mismatch");
  CHECK(error_kind([] { parse_theory("theory Bad ops m/2 eqs q(x1,x1)=x1"); }) == "unknown-op");
}

TEST_CASE("print and reparse round trip") {
  const auto grp = group_backend()->presentation();
  CHECK(parse_theory(print_theory(grp)) == grp);
}

TEST_CASE("term helpers") {
  const auto t = term("m(x1,m(x2,x3))");
  CHECK(t.node_count() == 5);
  CHECK(t.depth() == 2);
  CHECK(t.max_var() == 3);
  CHECK(to_string(t) == "m(x1,m(x2,x3))");
  const std::vector<Term> args{term("e"), term("x1")};
  CHECK(substitute(term("m(x1,x2)"), args) == term("m(e,x1)"));
}

TEST_CASE("translate along the forgetful and a renaming morphism") {
  const auto mon = monoid_backend()->presentation();
  const auto fg = make_morphism("f", mon, group_backend(), {{"m", term("m(x1,x2)")}, {"e", term("e")}});
  CHECK(translate_term(fg, term("m(x1,e)")) == term("m(x1,e)"));

  const auto to_ab = make_morphism("g", mon, abelian_group_backend(), {{"m", term("plus(x1,x2)")}, {"e", term("zero")}});
  CHECK(translate_term(to_ab, term("m(x1,m(x1,x2))")) == term("plus(x1,plus(x1,x2))"));

  const auto id = identity_morphism(group_backend());
  CHECK(translate_term(id, term("i(m(x1,x2))")) == term("i(m(x1,x2))"));
}

TEST_CASE("validate theory morphisms") {
  const auto mon = monoid_backend()->presentation();
  const auto fg = make_morphism("f", mon, group_backend(), {{"m", term("m(x1,x2)")}, {"e", term("e")}});
  CHECK(validate_theory_morphism(fg).valid);

  const auto opposite = make_morphism("op", mon, monoid_backend(), {{"m", term("m(x2,x1)")}, {"e", term("e")}});
  CHECK(validate_theory_morphism(opposite).valid);

  const auto proj = make_morphism("p", mon, monoid_backend(), {{"m", term("x1")}, {"e", term("e")}});
  const auto v = validate_theory_morphism(proj);
  CHECK_FALSE(v.valid);
  REQUIRE(v.failing_equation.has_value());
  CHECK(*v.failing_equation == 1);
  CHECK(v.lhs_nf != v.rhs_nf);
}

TEST_CASE("composition of theory morphisms") {
  const auto mon = monoid_backend()->presentation();
  const auto opposite = make_morphism("op", mon, monoid_backend(), {{"m", term("m(x2,x1)")}, {"e", term("e")}});
  const auto twice = compose(opposite, opposite);
  CHECK(translate_term(twice, term("m(x1,x2)")) == term("m(x1,x2)"));
}
