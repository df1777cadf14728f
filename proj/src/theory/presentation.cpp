#include "coalg/theory/presentation.hpp"

#include <algorithm>

#include "coalg/error.hpp"

namespace coalg {

void TheoryPresentation::validate() const {
  for (const auto& eq : equations) {
    check_term(signature, eq.lhs, eq.context);
    check_term(signature, eq.rhs, eq.context);
  }
}

Equation parse_equation(TokenStream& ts) {
  Equation eq;
  bool explicit_context = false;
  if (ts.accept("[")) {
    eq.context = ts.expect_number();
    ts.expect("]");
    explicit_context = true;
  }
  eq.lhs = parse_term(ts);
  ts.expect("=");
  eq.rhs = parse_term(ts);
  std::size_t used = std::max(eq.lhs.max_var(), eq.rhs.max_var());
  if (!explicit_context) {
    eq.context = used;
  } else if (used > eq.context) {
    throw Error("var-out-of-context", "equation " + to_string(eq.lhs) + "=" + to_string(eq.rhs) +
                                          " uses variables beyond its context " + std::to_string(eq.context));
  }
  return eq;
}

TheoryPresentation parse_theory_block(TokenStream& ts, const std::set<std::string>& stop_words) {
  auto stops = [&] {
    const auto& t = ts.peek();
    return t.kind == Token::Kind::End || (t.kind == Token::Kind::Ident && stop_words.count(t.text));
  };
  ts.expect("theory");
  TheoryPresentation th;
  th.name = ts.expect_ident();
  ts.expect("ops");
  std::vector<OpDecl> ops;
  while (!ts.at("eqs")) {
    if (stops()) ts.fail("expected 'eqs'");
    Token name_tok = ts.peek();
    OpDecl op;
    op.name = ts.expect_ident();
    if (variable_index(op.name)) ts.fail_at(name_tok, "operation name clashes with variable syntax");
    ts.expect("/");
    op.arity = ts.expect_number();
    for (const auto& prev : ops)
      if (prev.name == op.name) throw Error("duplicate-op", "operation '" + op.name + "' declared twice");
    ops.push_back(op);
  }
  ts.expect("eqs");
  th.signature = Signature(std::move(ops));
  while (!stops()) {
    th.equations.push_back(parse_equation(ts));
    if (!ts.accept(";")) break;
  }
  th.validate();
  return th;
}

TheoryPresentation parse_theory(std::string_view text) {
  TokenStream ts(text);
  auto th = parse_theory_block(ts, {});
  if (!ts.at_end()) ts.fail("trailing input after theory");
  return th;
}

std::string print_theory(const TheoryPresentation& theory) {
  std::string s = "theory " + theory.name + " ops";
  for (const auto& op : theory.signature.ops()) s += " " + op.name + "/" + std::to_string(op.arity);
  s += " eqs";
  for (std::size_t i = 0; i < theory.equations.size(); ++i) {
    s += i ? "; " : " ";
    s += to_string(theory.equations[i]);
  }
  return s;
}

}  // namespace coalg
