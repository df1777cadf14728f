#pragma once

#include <functional>
#include <string>

#include "coalg/error.hpp"
#include "coalg/theory/dsl_lexer.hpp"
#include "coalg/theory/presentation.hpp"

namespace coalg::test {

inline Term term(const std::string& text) {
  TokenStream ts(text);
  return parse_term(ts);
}

/// Kind of the coalg::Error thrown by `f`, or "" if it returns normally.
inline std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace coalg::test
