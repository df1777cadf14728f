#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace coalg {

/// An element of a carrier object.  Elements of finite carriers are the
/// singleton {index}; elements of free algebras carry the backend's canonical
/// form (word, exponent vector, polynomial, ...), so equality of codes is
/// equality in the algebra.
struct Element {
  std::vector<std::int64_t> code;

  Element() = default;
  explicit Element(std::vector<std::int64_t> c) : code(std::move(c)) {}

  static Element index(std::size_t i) { return Element({static_cast<std::int64_t>(i)}); }
  std::size_t as_index() const { return static_cast<std::size_t>(code.at(0)); }

  bool operator==(const Element&) const = default;
  auto operator<=>(const Element&) const = default;
};

}  // namespace coalg
