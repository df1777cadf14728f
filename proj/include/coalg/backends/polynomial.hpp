#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coalg/backends/element.hpp"
#include "coalg/error.hpp"
#include "coalg/theory/term.hpp"

namespace coalg::poly {

using Exponents = std::vector<std::int64_t>;

/// Degree-lexicographic, highest monomial first.
struct DegLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    std::int64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

/// Expanded polynomials over a coefficient ring described by `Ops`:
///   C zero(), one(); C add(C, C), mul(C, C), neg(C).
/// Zero coefficients are never stored, so the map is a canonical form.
template <class Ops>
class Arith {
 public:
  using C = typename Ops::C;
  using Poly = std::map<Exponents, C, DegLexGreater>;

  Arith(Ops ops, std::size_t nvars) : ops_(ops), nvars_(nvars) {}

  Poly decode(const Element& e) const {
    Poly p;
    const auto stride = nvars_ + 1;
    if (e.code.size() % stride != 0) throw Error("malformed-element", "polynomial code has the wrong shape");
    for (std::size_t i = 0; i < e.code.size(); i += stride)
      p.emplace(Exponents(e.code.begin() + i + 1, e.code.begin() + i + stride), static_cast<C>(e.code[i]));
    return p;
  }

  Element encode(const Poly& p) const {
    std::vector<std::int64_t> code;
    for (const auto& [mono, c] : p) {
      code.push_back(static_cast<std::int64_t>(c));
      code.insert(code.end(), mono.begin(), mono.end());
    }
    return Element(std::move(code));
  }

  Poly constant(C c) const {
    Poly p;
    accumulate(p, Exponents(nvars_, 0), c);
    return p;
  }
  Poly variable(std::size_t i) const {
    Exponents e(nvars_, 0);
    e.at(i) = 1;
    Poly p;
    accumulate(p, e, ops_.one());
    return p;
  }
  Poly add(const Poly& a, const Poly& b) const {
    Poly r = a;
    for (const auto& [m, c] : b) accumulate(r, m, c);
    return r;
  }
  Poly neg(const Poly& a) const {
    Poly r;
    for (const auto& [m, c] : a) r.emplace(m, ops_.neg(c));
    return r;
  }
  Poly mul(const Poly& a, const Poly& b) const {
    Poly r;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Exponents m(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
        accumulate(r, m, ops_.mul(ca, cb));
      }
    return r;
  }
  Poly scale(C c, const Poly& a) const {
    Poly r;
    for (const auto& [m, ca] : a) accumulate(r, m, ops_.mul(c, ca));
    return r;
  }

  /// times-chain of variables, `one` for the empty monomial.
  Term monomial_term(const Exponents& m) const {
    std::vector<Term> factors;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::int64_t k = 0; k < m[i]; ++k) factors.push_back(Term::variable(i + 1));
    if (factors.empty()) return Term::apply("one");
    Term t = factors.back();
    for (std::size_t i = factors.size() - 1; i-- > 0;) t = Term::apply("times", {factors[i], t});
    return t;
  }

  std::string monomial_string(const Exponents& m, const std::vector<std::string>& names) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names.at(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  const Ops& ops() const { return ops_; }

 private:
  void accumulate(Poly& p, const Exponents& m, C c) const {
    if (c == ops_.zero()) return;
    auto it = p.find(m);
    if (it == p.end()) {
      p.emplace(m, c);
      return;
    }
    it->second = ops_.add(it->second, c);
    if (it->second == ops_.zero()) p.erase(it);
  }

  Ops ops_;
  std::size_t nvars_;
};

struct IntegerOps {
  using C = std::int64_t;
  C zero() const { return 0; }
  C one() const { return 1; }
  C add(C a, C b) const { return a + b; }
  C mul(C a, C b) const { return a * b; }
  C neg(C a) const { return -a; }
};

}  // namespace coalg::poly
