#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coalg/theory/term.hpp"

namespace coalg {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

/// Tokenizer shared by every block of the workspace DSL.  `#` starts a line
/// comment.  Identifiers may contain letters, digits, `_` and `'`.
class TokenStream {
 public:
  explicit TokenStream(std::string_view text);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at(std::string_view text) const;
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool accept(std::string_view text);
  void expect(std::string_view text);
  std::string expect_ident();
  std::size_t expect_number();
  long long expect_integer();

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& tok, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// `x1`, `x2`, ... are variables everywhere in the DSL.
std::optional<std::size_t> variable_index(std::string_view ident);

/// Resolves `base@copy` leaves (used by co-operation bodies).  Returns the
/// variable the leaf stands for.
using LeafResolver = std::function<Term(const std::string& base, std::size_t copy, const Token& where)>;

/// Prefix term `op(arg,...)`.  Bare identifiers matching x<k> become
/// variables; `base@k` leaves go through `leaves` when provided.
Term parse_term(TokenStream& ts, const LeafResolver& leaves = {});

}  // namespace coalg
