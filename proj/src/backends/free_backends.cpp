#include <algorithm>
#include <cstdlib>

#include "coalg/backends/polynomial.hpp"
#include "coalg/backends/registry.hpp"
#include "coalg/error.hpp"

namespace coalg {

namespace {

bool all_short(std::span<const std::string> names) {
  return std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
}

std::string join_symbols(const std::vector<std::string>& toks, std::span<const std::string> names) {
  std::string s;
  const char* sep = all_short(names) ? "" : "*";
  for (std::size_t i = 0; i < toks.size(); ++i) s += (i ? sep : "") + toks[i];
  return s;
}

Term right_chain(const std::string& op, std::vector<Term> items, const std::string& empty) {
  if (items.empty()) return Term::apply(empty);
  Term t = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) t = Term::apply(op, {items[i], t});
  return t;
}

Element unit_vector(std::size_t i, std::size_t n, std::int64_t zero, std::int64_t one) {
  std::vector<std::int64_t> v(n, zero);
  v.at(i) = one;
  return Element(std::move(v));
}

// Linear combination printer shared by Ab and Mod(R).
std::string show_combination(const std::vector<std::pair<std::string, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [coeff, name] : terms) {
    const bool negative = !coeff.empty() && coeff[0] == '-';
    std::string c = negative ? coeff.substr(1) : coeff;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? "-" : "+";
    }
    if (!c.empty()) s += c + "*";
    s += name;
  }
  return s;
}

class SetBackend final : public VarietyBackend {
 public:
  SetBackend() : VarietyBackend("Set", parse_theory("theory Set ops eqs")) {}
  Element free_generator(std::size_t i, std::size_t) const override { return Element::index(i); }
  Element free_apply(std::size_t, std::span<const Element>, std::size_t) const override {
    throw Error("unknown-op", "Set has no operations");
  }
  Term free_to_term(const Element& e, std::size_t) const override { return Term::variable(e.as_index() + 1); }
  std::string free_show(const Element& e, std::span<const std::string> names) const override {
    return names[e.as_index()];
  }
  bool has_finite_coproducts() const override { return true; }
  FiniteCoproduct finite_coproduct(std::span<const FiniteAlgebra* const> factors) const override {
    FiniteCoproduct out;
    std::size_t total = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      std::vector<std::size_t> inj;
      for (std::size_t a = 0; a < factors[k]->size(); ++a) {
        inj.push_back(total + a);
        out.labels.push_back(std::to_string(a) + std::string(k + 1, '\''));
      }
      total += factors[k]->size();
      out.injections.push_back(std::move(inj));
    }
    out.algebra = FiniteAlgebra(signature(), total, {});
    return out;
  }
};

class PointedSetBackend final : public VarietyBackend {
 public:
  PointedSetBackend() : VarietyBackend("SetPt", parse_theory("theory SetPt ops pt/0 eqs")) {}
  Element free_generator(std::size_t i, std::size_t) const override { return Element::index(i); }
  Element free_apply(std::size_t, std::span<const Element>, std::size_t) const override { return Element({-1}); }
  Term free_to_term(const Element& e, std::size_t) const override {
    if (e.code[0] < 0) return Term::apply("pt");
    return Term::variable(e.as_index() + 1);
  }
  std::string free_show(const Element& e, std::span<const std::string> names) const override {
    return e.code[0] < 0 ? "*" : names[e.as_index()];
  }
  bool has_finite_coproducts() const override { return true; }
  // Wedge sum: the basepoints are identified to 0.
  FiniteCoproduct finite_coproduct(std::span<const FiniteAlgebra* const> factors) const override {
    FiniteCoproduct out;
    std::size_t total = 1;
    out.labels.push_back("*");
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const auto pt = factors[k]->apply(std::size_t{0}, {});
      std::vector<std::size_t> inj;
      for (std::size_t a = 0; a < factors[k]->size(); ++a) {
        if (a == pt) {
          inj.push_back(0);
          continue;
        }
        inj.push_back(total++);
        out.labels.push_back(std::to_string(a) + std::string(k + 1, '\''));
      }
      out.injections.push_back(std::move(inj));
    }
    out.algebra = FiniteAlgebra(signature(), total, {{0}});
    return out;
  }
};

class MonoidBackend final : public VarietyBackend {
 public:
  MonoidBackend()
      : VarietyBackend("Mon", parse_theory("theory Mon ops m/2 e/0 eqs m(m(x1,x2),x3)=m(x1,m(x2,x3)); "
                                           "m(e,x1)=x1; m(x1,e)=x1")) {}
  Element free_generator(std::size_t i, std::size_t) const override { return Element::index(i); }
  Element free_apply(std::size_t op, std::span<const Element> args, std::size_t) const override {
    if (op == 1) return Element();
    auto code = args[0].code;
    code.insert(code.end(), args[1].code.begin(), args[1].code.end());
    return Element(std::move(code));
  }
  Term free_to_term(const Element& e, std::size_t) const override {
    std::vector<Term> items;
    for (auto g : e.code) items.push_back(Term::variable(static_cast<std::size_t>(g) + 1));
    return right_chain("m", std::move(items), "e");
  }
  std::string free_show(const Element& e, std::span<const std::string> names) const override {
    if (e.code.empty()) return "1";
    std::vector<std::string> toks;
    for (auto g : e.code) toks.push_back(names[g]);
    return join_symbols(toks, names);
  }
};

// Letters are ±(g+1); words are freely reduced.
class GroupBackend final : public VarietyBackend {
 public:
  GroupBackend()
      : VarietyBackend("Grp", parse_theory("theory Grp ops m/2 e/0 i/1 eqs m(m(x1,x2),x3)=m(x1,m(x2,x3)); "
                                           "m(e,x1)=x1; m(x1,e)=x1; m(x1,i(x1))=e; m(i(x1),x1)=e")) {}
  Element free_generator(std::size_t i, std::size_t) const override {
    return Element({static_cast<std::int64_t>(i) + 1});
  }
  Element free_apply(std::size_t op, std::span<const Element> args, std::size_t) const override {
    if (op == 1) return Element();
    if (op == 2) {
      std::vector<std::int64_t> inv(args[0].code.rbegin(), args[0].code.rend());
      for (auto& l : inv) l = -l;
      return Element(std::move(inv));
    }
    auto code = args[0].code;
    for (auto l : args[1].code) {
      if (!code.empty() && code.back() == -l)
        code.pop_back();
      else
        code.push_back(l);
    }
    return Element(std::move(code));
  }
  Term free_to_term(const Element& e, std::size_t) const override {
    std::vector<Term> items;
    for (auto l : e.code) {
      Term x = Term::variable(static_cast<std::size_t>(std::llabs(l)));
      items.push_back(l > 0 ? x : Term::apply("i", {x}));
    }
    return right_chain("m", std::move(items), "e");
  }
  std::string free_show(const Element& e, std::span<const std::string> names) const override {
    if (e.code.empty()) return "1";
    std::vector<std::string> toks;
    for (auto l : e.code) toks.push_back(names[std::llabs(l) - 1] + (l < 0 ? "^-1" : ""));
    return join_symbols(toks, names);
  }
};

// Exponent vectors; shared by cMon (with unit) and cSem (without).
class CountingBackend final : public VarietyBackend {
 public:
  explicit CountingBackend(bool unital)
      : VarietyBackend(unital ? "cMon" : "cSem",
                       parse_theory(unital ? "theory cMon ops m/2 e/0 eqs m(m(x1,x2),x3)=m(x1,m(x2,x3)); "
                                             "m(x1,x2)=m(x2,x1); m(e,x1)=x1"
                                           : "theory cSem ops m/2 eqs m(m(x1,x2),x3)=m(x1,m(x2,x3)); "
                                             "m(x1,x2)=m(x2,x1)")),
        unital_(unital) {}

  Element free_generator(std::size_t i, std::size_t gens) const override { return unit_vector(i, gens, 0, 1); }
  Element free_apply(std::size_t op, std::span<const Element> args, std::size_t gens) const override {
    if (op == 1) return Element(std::vector<std::int64_t>(gens, 0));
    auto code = args[0].code;
    for (std::size_t i = 0; i < code.size(); ++i) code[i] += args[1].code[i];
    return Element(std::move(code));
  }
  Term free_to_term(const Element& e, std::size_t) const override {
    std::vector<Term> items;
    for (std::size_t i = 0; i < e.code.size(); ++i)
      for (std::int64_t k = 0; k < e.code[i]; ++k) items.push_back(Term::variable(i + 1));
    if (items.empty() && !unital_) throw Error("malformed-element", "empty product in a semigroup");
    return right_chain("m", std::move(items), "e");
  }
  std::string free_show(const Element& e, std::span<const std::string> names) const override {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < e.code.size(); ++i) {
      if (e.code[i] == 0) continue;
      s += (first ? "" : ",") + names[i] + ":" + std::to_string(e.code[i]);
      first = false;
    }
    return s + "}";
  }

  bool has_finite_coproducts() const override { return true; }
  FiniteCoproduct finite_coproduct(std::span<const FiniteAlgebra* const> factors) const override {
    if (unital_) return biproduct(signature(), factors, "e");
    return unitarization(factors);
  }

 private:
  // (S_1^0 x .. x S_n^0) \ {(0,..,0)}: coordinate 0 is the adjoined unit,
  // coordinate a+1 the element a.  A fresh unit is adjoined even when S_k
  // already has one.
  FiniteCoproduct unitarization(std::span<const FiniteAlgebra* const> factors) const {
    const auto n = factors.size();
    std::vector<std::size_t> radix;
    std::size_t total = 1;
    for (const auto* f : factors) {
      radix.push_back(f->size() + 1);
      total *= f->size() + 1;
    }
    auto decode = [&](std::size_t idx) {
      std::vector<std::size_t> c(n);
      for (std::size_t k = n; k-- > 0;) {
        c[k] = idx % radix[k];
        idx /= radix[k];
      }
      return c;
    };
    auto encode = [&](const std::vector<std::size_t>& c) {
      std::size_t idx = 0;
      for (std::size_t k = 0; k < n; ++k) idx = idx * radix[k] + c[k];
      return idx - 1;  // skip the all-unit tuple, which encodes to 0
    };
    std::vector<std::vector<std::size_t>> coords;
    for (std::size_t i = 1; i < total; ++i) coords.push_back(decode(i));
    FiniteCoproduct out;
    out.algebra = FiniteAlgebra::from_function(signature(), coords.size(),
                                               [&](std::size_t, std::span<const std::size_t> args) {
                                                 const auto& a = coords[args[0]];
                                                 const auto& b = coords[args[1]];
                                                 std::vector<std::size_t> c(n);
                                                 for (std::size_t k = 0; k < n; ++k) {
                                                   if (a[k] == 0)
                                                     c[k] = b[k];
                                                   else if (b[k] == 0)
                                                     c[k] = a[k];
                                                   else
                                                     c[k] = factors[k]->apply(std::size_t{0},
                                                                              std::vector<std::size_t>{a[k] - 1, b[k] - 1}) +
                                                            1;
                                                 }
                                                 return encode(c);
                                               });
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::size_t> inj;
      for (std::size_t a = 0; a < factors[k]->size(); ++a) {
        std::vector<std::size_t> c(n, 0);
        c[k] = a + 1;
        inj.push_back(encode(c));
      }
      out.injections.push_back(std::move(inj));
    }
    for (const auto& c : coords) {
      std::string s = "(";
      for (std::size_t k = 0; k < n; ++k) s += (k ? "," : "") + (c[k] == 0 ? std::string("-") : std::to_string(c[k] - 1));
      out.labels.push_back(s + ")");
    }
    return out;
  }

  bool unital_;
};

const char* kAbEquations =
    "plus(plus(x1,x2),x3)=plus(x1,plus(x2,x3)); plus(x1,x2)=plus(x2,x1); plus(zero,x1)=x1; plus(x1,neg(x1))=zero";

class AbelianGroupBackend final : public VarietyBackend {
 public:
  AbelianGroupBackend()
      : VarietyBackend("Ab", parse_theory(std::string("theory Ab ops plus/2 zero/0 neg/1 eqs ") + kAbEquations)) {}
  Element free_generator(std::size_t i, std::size_t gens) const override { return unit_vector(i, gens, 0, 1); }
  Element free_apply(std::size_t op, std::span<const Element> args, std::size_t gens) const override {
    if (op == 1) return Element(std::vector<std::int64_t>(gens, 0));
    auto code = args[0].code;
    for (std::size_t i = 0; i < code.size(); ++i) code[i] = op == 2 ? -code[i] : code[i] + args[1].code[i];
    return Element(std::move(code));
  }
  Term free_to_term(const Element& e, std::size_t) const override {
    std::vector<Term> items;
    for (std::size_t i = 0; i < e.code.size(); ++i) {
      Term x = Term::variable(i + 1);
      if (e.code[i] < 0) x = Term::apply("neg", {x});
      for (std::int64_t k = 0; k < std::llabs(e.code[i]); ++k) items.push_back(x);
    }
    return right_chain("plus", std::move(items), "zero");
  }
  std::string free_show(const Element& e, std::span<const std::string> names) const override {
    std::vector<std::pair<std::string, std::string>> terms;
    for (std::size_t i = 0; i < e.code.size(); ++i) {
      const auto c = e.code[i];
      if (c == 0) continue;
      std::string coeff = c == 1 ? "" : c == -1 ? "-" : std::to_string(c);
      terms.emplace_back(coeff, names[i]);
    }
    return show_combination(terms);
  }
  bool has_finite_coproducts() const override { return true; }
  FiniteCoproduct finite_coproduct(std::span<const FiniteAlgebra* const> factors) const override {
    return biproduct(signature(), factors, "zero");
  }
};

class ModuleBackend final : public VarietyBackend {
 public:
  explicit ModuleBackend(RingPtr ring)
      : VarietyBackend("Mod(" + ring->name() + ")", module_theory(*ring)), ring_(std::move(ring)) {}

  Element free_generator(std::size_t i, std::size_t gens) const override {
    return unit_vector(i, gens, static_cast<std::int64_t>(ring_->zero()), static_cast<std::int64_t>(ring_->one()));
  }
  Element free_apply(std::size_t op, std::span<const Element> args, std::size_t gens) const override {
    const auto& R = *ring_;
    if (op == 1) return Element(std::vector<std::int64_t>(gens, static_cast<std::int64_t>(R.zero())));
    auto code = args[0].code;
    for (std::size_t i = 0; i < code.size(); ++i) {
      const auto a = static_cast<std::size_t>(code[i]);
      std::size_t r;
      if (op == 0)
        r = R.add(a, static_cast<std::size_t>(args[1].code[i]));
      else if (op == 2)
        r = R.neg(a);
      else
        r = R.mul(op - 3, a);
      code[i] = static_cast<std::int64_t>(r);
    }
    return Element(std::move(code));
  }
  Term free_to_term(const Element& e, std::size_t) const override {
    std::vector<Term> items;
    for (std::size_t i = 0; i < e.code.size(); ++i) {
      const auto c = static_cast<std::size_t>(e.code[i]);
      if (c == ring_->zero()) continue;
      items.push_back(Term::apply(scalar_op(c), {Term::variable(i + 1)}));
    }
    return right_chain("plus", std::move(items), "zero");
  }
  std::string free_show(const Element& e, std::span<const std::string> names) const override {
    std::vector<std::pair<std::string, std::string>> terms;
    for (std::size_t i = 0; i < e.code.size(); ++i) {
      const auto c = static_cast<std::size_t>(e.code[i]);
      if (c == ring_->zero()) continue;
      terms.emplace_back(c == ring_->one() ? "" : std::to_string(c), names[i]);
    }
    return show_combination(terms);
  }
  bool has_finite_coproducts() const override { return true; }
  FiniteCoproduct finite_coproduct(std::span<const FiniteAlgebra* const> factors) const override {
    return biproduct(signature(), factors, "zero");
  }

 private:
  RingPtr ring_;
};

class CommRingBackend final : public VarietyBackend {
 public:
  CommRingBackend()
      : VarietyBackend("cRing",
                       parse_theory(std::string("theory cRing ops plus/2 zero/0 neg/1 times/2 one/0 eqs ") +
                                    kAbEquations +
                                    "; times(times(x1,x2),x3)=times(x1,times(x2,x3)); times(x1,x2)=times(x2,x1); "
                                    "times(one,x1)=x1; times(x1,plus(x2,x3))=plus(times(x1,x2),times(x1,x3))")) {}

  Element free_generator(std::size_t i, std::size_t gens) const override {
    poly::Arith<poly::IntegerOps> A({}, gens);
    return A.encode(A.variable(i));
  }
  Element free_apply(std::size_t op, std::span<const Element> args, std::size_t gens) const override {
    poly::Arith<poly::IntegerOps> A({}, gens);
    switch (op) {
      case 0: return A.encode(A.add(A.decode(args[0]), A.decode(args[1])));
      case 1: return A.encode({});
      case 2: return A.encode(A.neg(A.decode(args[0])));
      case 3: return A.encode(A.mul(A.decode(args[0]), A.decode(args[1])));
      default: return A.encode(A.constant(1));
    }
  }
  Term free_to_term(const Element& e, std::size_t gens) const override {
    poly::Arith<poly::IntegerOps> A({}, gens);
    std::vector<Term> items;
    for (const auto& [m, c] : A.decode(e)) {
      Term t = A.monomial_term(m);
      if (c < 0) t = Term::apply("neg", {t});
      for (std::int64_t k = 0; k < std::llabs(c); ++k) items.push_back(t);
    }
    return right_chain("plus", std::move(items), "zero");
  }
  std::string free_show(const Element& e, std::span<const std::string> names) const override {
    poly::Arith<poly::IntegerOps> A({}, names.size());
    const std::vector<std::string> nm(names.begin(), names.end());
    std::string s;
    for (const auto& [m, c] : A.decode(e)) {
      const auto mono = A.monomial_string(m, nm);
      const auto mag = std::llabs(c);
      if (!s.empty()) s += c < 0 ? "-" : "+";
      else if (c < 0) s += "-";
      if (mono.empty())
        s += std::to_string(mag);
      else
        s += (mag == 1 ? "" : std::to_string(mag) + "*") + mono;
    }
    return s.empty() ? "0" : s;
  }
};

}  // namespace

std::string scalar_op(std::size_t r) { return "s" + std::to_string(r); }

TheoryPresentation module_theory(const FiniteRing& R) {
  std::string text = "theory Mod_" + R.name() + " ops plus/2 zero/0 neg/1";
  for (std::size_t r = 0; r < R.size(); ++r) text += " " + scalar_op(r) + "/1";
  text += std::string(" eqs ") + kAbEquations;
  for (std::size_t r = 0; r < R.size(); ++r) {
    const auto s = scalar_op(r);
    text += "; " + s + "(plus(x1,x2))=plus(" + s + "(x1)," + s + "(x2))";
  }
  for (std::size_t r = 0; r < R.size(); ++r)
    for (std::size_t q = 0; q < R.size(); ++q) {
      text += "; plus(" + scalar_op(r) + "(x1)," + scalar_op(q) + "(x1))=" + scalar_op(R.add(r, q)) + "(x1)";
      text += "; " + scalar_op(r) + "(" + scalar_op(q) + "(x1))=" + scalar_op(R.mul(r, q)) + "(x1)";
    }
  text += "; " + scalar_op(R.one()) + "(x1)=x1";
  return parse_theory(text);
}

BackendPtr set_backend() {
  static const BackendPtr b = std::make_shared<SetBackend>();
  return b;
}
BackendPtr pointed_set_backend() {
  static const BackendPtr b = std::make_shared<PointedSetBackend>();
  return b;
}
BackendPtr monoid_backend() {
  static const BackendPtr b = std::make_shared<MonoidBackend>();
  return b;
}
BackendPtr group_backend() {
  static const BackendPtr b = std::make_shared<GroupBackend>();
  return b;
}
BackendPtr comm_monoid_backend() {
  static const BackendPtr b = std::make_shared<CountingBackend>(true);
  return b;
}
BackendPtr comm_semigroup_backend() {
  static const BackendPtr b = std::make_shared<CountingBackend>(false);
  return b;
}
BackendPtr abelian_group_backend() {
  static const BackendPtr b = std::make_shared<AbelianGroupBackend>();
  return b;
}
BackendPtr comm_ring_backend() {
  static const BackendPtr b = std::make_shared<CommRingBackend>();
  return b;
}
BackendPtr module_backend(const RingPtr& ring) { return std::make_shared<ModuleBackend>(ring); }

}  // namespace coalg
