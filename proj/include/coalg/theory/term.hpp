#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coalg {

struct OpDecl {
  std::string name;
  std::size_t arity = 0;

  bool operator==(const OpDecl&) const = default;
};

/// Ordered list of operation symbols with arities.  Names are unique.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpDecl> ops);

  const std::vector<OpDecl>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  const OpDecl& op(std::size_t i) const { return ops_.at(i); }

  std::optional<std::size_t> find(const std::string& name) const;
  /// Index of `name`; throws unknown-op.
  std::size_t index_of(const std::string& name) const;
  std::size_t arity(const std::string& name) const { return ops_[index_of(name)].arity; }
  std::size_t max_arity() const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<OpDecl> ops_;
};

/// A Σ-term.  Variables are positional: Var(i) is x_i, 1-based, and is only
/// meaningful relative to an ambient context arity supplied by the caller.
struct Term {
  enum class Kind { Var, App };

  Kind kind = Kind::Var;
  std::size_t var = 0;
  std::string op;
  std::vector<Term> args;

  static Term variable(std::size_t index);
  static Term apply(std::string op, std::vector<Term> args = {});

  bool is_var() const { return kind == Kind::Var; }

  std::size_t depth() const;
  std::size_t node_count() const;
  /// Largest variable index occurring, 0 if the term is closed.
  std::size_t max_var() const;

  bool operator==(const Term&) const = default;
  std::strong_ordering operator<=>(const Term& other) const;
};

/// Throws arity-mismatch / unknown-op / var-out-of-context.
void check_term(const Signature& sig, const Term& t, std::size_t context);

/// Replaces x_i by args[i-1].  `t` must live in context args.size().
Term substitute(const Term& t, std::span<const Term> args);

/// Prefix rendering: `m(x1,e)`, nullary ops print bare.
std::string to_string(const Term& t);

struct Equation {
  std::size_t context = 0;
  Term lhs;
  Term rhs;

  bool operator==(const Equation&) const = default;
};

std::string to_string(const Equation& eq);

}  // namespace coalg
