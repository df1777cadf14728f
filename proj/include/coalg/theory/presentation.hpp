#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "coalg/theory/dsl_lexer.hpp"
#include "coalg/theory/term.hpp"

namespace coalg {

/// A signature plus equations: an equational theory (Σ, E).
struct TheoryPresentation {
  std::string name;
  Signature signature;
  std::vector<Equation> equations;

  /// Throws if any equation is ill-formed over the signature.
  void validate() const;

  bool operator==(const TheoryPresentation&) const = default;
};

/// Parses a single `theory <name> ops <id>/<arity> ... eqs <t>=<t>; ...` block.
TheoryPresentation parse_theory(std::string_view text);

/// Block-level entry point used by the workspace loader; stops before any
/// identifier in `stop_words` that starts a new block.
TheoryPresentation parse_theory_block(TokenStream& ts, const std::set<std::string>& stop_words);

/// Canonical single-line rendering, inverse of parse_theory.
std::string print_theory(const TheoryPresentation& theory);

Equation parse_equation(TokenStream& ts);

}  // namespace coalg
