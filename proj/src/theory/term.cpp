#include "coalg/theory/term.hpp"

#include <algorithm>
#include <unordered_set>

#include "coalg/error.hpp"

namespace coalg {

Signature::Signature(std::vector<OpDecl> ops) : ops_(std::move(ops)) {
  std::unordered_set<std::string> seen;
  for (const auto& op : ops_) {
    if (!seen.insert(op.name).second) throw Error("duplicate-op", "operation '" + op.name + "' declared twice");
  }
}

std::optional<std::size_t> Signature::find(const std::string& name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Signature::index_of(const std::string& name) const {
  auto i = find(name);
  if (!i) throw Error("unknown-op", "operation '" + name + "' is not in the signature");
  return *i;
}

std::size_t Signature::max_arity() const {
  std::size_t m = 0;
  for (const auto& op : ops_) m = std::max(m, op.arity);
  return m;
}

Term Term::variable(std::size_t index) {
  Term t;
  t.kind = Kind::Var;
  t.var = index;
  return t;
}

Term Term::apply(std::string op, std::vector<Term> args) {
  Term t;
  t.kind = Kind::App;
  t.op = std::move(op);
  t.args = std::move(args);
  return t;
}

std::size_t Term::depth() const {
  if (is_var()) return 0;
  std::size_t d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  return d + 1;
}

std::size_t Term::node_count() const {
  std::size_t n = 1;
  for (const auto& a : args) n += a.node_count();
  return n;
}

std::size_t Term::max_var() const {
  if (is_var()) return var;
  std::size_t m = 0;
  for (const auto& a : args) m = std::max(m, a.max_var());
  return m;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (kind != other.kind) return kind <=> other.kind;
  if (is_var()) return var <=> other.var;
  if (auto c = op <=> other.op; c != 0) return c;
  if (args.size() != other.args.size()) return args.size() <=> other.args.size();
  for (std::size_t i = 0; i < args.size(); ++i)
    if (auto c = args[i] <=> other.args[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

void check_term(const Signature& sig, const Term& t, std::size_t context) {
  if (t.is_var()) {
    if (t.var < 1 || t.var > context)
      throw Error("var-out-of-context",
                  "variable x" + std::to_string(t.var) + " outside context " + std::to_string(context));
    return;
  }
  auto idx = sig.find(t.op);
  if (!idx) throw Error("unknown-op", "operation '" + t.op + "' is not in the signature");
  if (sig.op(*idx).arity != t.args.size())
    throw Error("arity-mismatch", "operation '" + t.op + "' expects " + std::to_string(sig.op(*idx).arity) +
                                      " arguments, got " + std::to_string(t.args.size()));
  for (const auto& a : t.args) check_term(sig, a, context);
}

Term substitute(const Term& t, std::span<const Term> args) {
  if (t.is_var()) {
    if (t.var < 1 || t.var > args.size())
      throw Error("var-out-of-context", "substitution has no value for x" + std::to_string(t.var));
    return args[t.var - 1];
  }
  std::vector<Term> out;
  out.reserve(t.args.size());
  for (const auto& a : t.args) out.push_back(substitute(a, args));
  return Term::apply(t.op, std::move(out));
}

std::string to_string(const Term& t) {
  if (t.is_var()) return "x" + std::to_string(t.var);
  if (t.args.empty()) return t.op;
  std::string s = t.op + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ",";
    s += to_string(t.args[i]);
  }
  return s + ")";
}

std::string to_string(const Equation& eq) {
  std::string s;
  if (eq.context != std::max(eq.lhs.max_var(), eq.rhs.max_var())) s = "[" + std::to_string(eq.context) + "] ";
  return s + to_string(eq.lhs) + "=" + to_string(eq.rhs);
}

}  // namespace coalg
