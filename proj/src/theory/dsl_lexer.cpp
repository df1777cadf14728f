#include "coalg/theory/dsl_lexer.hpp"

#include <cctype>

#include "coalg/error.hpp"

namespace coalg {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

TokenStream::TokenStream(std::string_view text) {
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    std::size_t start = i;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      tok.kind = Token::Kind::Ident;
      tok.text = std::string(text.substr(start, j - start));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Token::Kind::Number;
      tok.text = std::string(text.substr(start, j - start));
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tok.kind = Token::Kind::Punct;
      tok.text = "->";
      advance(2);
    } else if (std::string_view("()[]{},;=/:@*+-").find(c) != std::string_view::npos) {
      tok.kind = Token::Kind::Punct;
      tok.text = std::string(1, c);
      advance(1);
    } else {
      throw Error("syntax", std::to_string(line) + ":" + std::to_string(col) + ": unexpected character '" +
                                std::string(1, c) + "'");
    }
    tokens_.push_back(std::move(tok));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.line = line;
  end.column = col;
  tokens_.push_back(end);
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t p = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[p];
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::at(std::string_view text) const {
  const auto& t = peek();
  return t.kind != Token::Kind::End && t.text == text;
}

bool TokenStream::accept(std::string_view text) {
  if (!at(text)) return false;
  next();
  return true;
}

void TokenStream::expect(std::string_view text) {
  if (!at(text)) fail("expected '" + std::string(text) + "'");
  next();
}

std::string TokenStream::expect_ident() {
  if (peek().kind != Token::Kind::Ident) fail("expected identifier");
  return next().text;
}

std::size_t TokenStream::expect_number() {
  if (peek().kind != Token::Kind::Number) fail("expected number");
  return static_cast<std::size_t>(std::stoull(next().text));
}

long long TokenStream::expect_integer() {
  bool negative = accept("-");
  auto v = static_cast<long long>(expect_number());
  return negative ? -v : v;
}

void TokenStream::fail(const std::string& message) const { fail_at(peek(), message); }

void TokenStream::fail_at(const Token& tok, const std::string& message) const {
  std::string found = tok.kind == Token::Kind::End ? "end of input" : "'" + tok.text + "'";
  throw Error("syntax", std::to_string(tok.line) + ":" + std::to_string(tok.column) + ": " + message + " (found " +
                            found + ")");
}

std::optional<std::size_t> variable_index(std::string_view ident) {
  if (ident.size() < 2 || ident[0] != 'x') return std::nullopt;
  std::size_t v = 0;
  for (std::size_t i = 1; i < ident.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(ident[i]))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(ident[i] - '0');
  }
  if (v == 0) return std::nullopt;
  return v;
}

Term parse_term(TokenStream& ts, const LeafResolver& leaves) {
  const Token head = ts.peek();
  std::string base;
  if (head.kind == Token::Kind::Ident || head.kind == Token::Kind::Number) {
    base = ts.next().text;
  } else if (head.kind == Token::Kind::Punct && head.text == "_") {
    base = ts.next().text;
  } else {
    ts.fail("expected term");
  }
  if (ts.at("@")) {
    if (!leaves) ts.fail_at(head, "copy-tagged leaf not allowed here");
    ts.next();
    std::size_t copy = ts.expect_number();
    return leaves(base, copy, head);
  }
  if (head.kind == Token::Kind::Number) ts.fail_at(head, "bare number is not a term");
  if (auto v = variable_index(base)) {
    if (ts.at("(")) ts.fail_at(head, "variable applied to arguments");
    return Term::variable(*v);
  }
  std::vector<Term> args;
  if (ts.accept("(")) {
    if (!ts.at(")")) {
      do {
        args.push_back(parse_term(ts, leaves));
      } while (ts.accept(","));
    }
    ts.expect(")");
  }
  return Term::apply(base, std::move(args));
}

}  // namespace coalg
