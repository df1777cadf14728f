#include "coalg/backends/polynomial.hpp"
#include "coalg/backends/registry.hpp"
#include "coalg/error.hpp"
#include "coalg/hopf/comm_algebra.hpp"

namespace coalg {

namespace {

struct RingOps {
  using C = std::int64_t;
  const FiniteRing* ring;
  C zero() const { return static_cast<C>(ring->zero()); }
  C one() const { return static_cast<C>(ring->one()); }
  C add(C a, C b) const { return static_cast<C>(ring->add(static_cast<std::size_t>(a), static_cast<std::size_t>(b))); }
  C mul(C a, C b) const { return static_cast<C>(ring->mul(static_cast<std::size_t>(a), static_cast<std::size_t>(b))); }
  C neg(C a) const { return static_cast<C>(ring->neg(static_cast<std::size_t>(a))); }
};

class CommAlgebraBackend final : public VarietyBackend {
 public:
  explicit CommAlgebraBackend(RingPtr ring)
      : VarietyBackend("cAlg(" + ring->name() + ")", comm_algebra_theory(*ring)), ring_(std::move(ring)) {}

  Element free_generator(std::size_t i, std::size_t gens) const override {
    auto A = arith(gens);
    return A.encode(A.variable(i));
  }
  Element free_apply(std::size_t op, std::span<const Element> args, std::size_t gens) const override {
    auto A = arith(gens);
    switch (op) {
      case 0: return A.encode(A.add(A.decode(args[0]), A.decode(args[1])));
      case 1: return A.encode({});
      case 2: return A.encode(A.neg(A.decode(args[0])));
      case 3: return A.encode(A.mul(A.decode(args[0]), A.decode(args[1])));
      case 4: return A.encode(A.constant(A.ops().one()));
      default: return A.encode(A.scale(static_cast<std::int64_t>(op - 5), A.decode(args[0])));
    }
  }
  Term free_to_term(const Element& e, std::size_t gens) const override {
    auto A = arith(gens);
    std::vector<Term> items;
    for (const auto& [m, c] : A.decode(e)) {
      Term t = A.monomial_term(m);
      if (static_cast<std::size_t>(c) != ring_->one()) t = Term::apply(scalar_op(static_cast<std::size_t>(c)), {t});
      items.push_back(std::move(t));
    }
    if (items.empty()) return Term::apply("zero");
    Term t = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;) t = Term::apply("plus", {items[i], t});
    return t;
  }
  std::string free_show(const Element& e, std::span<const std::string> names) const override {
    auto A = arith(names.size());
    const std::vector<std::string> nm(names.begin(), names.end());
    std::string s;
    for (const auto& [m, c] : A.decode(e)) {
      const auto mono = A.monomial_string(m, nm);
      const auto coeff = std::to_string(c);
      if (!s.empty()) s += "+";
      if (mono.empty())
        s += coeff;
      else
        s += (static_cast<std::size_t>(c) == ring_->one() ? "" : coeff + "*") + mono;
    }
    return s.empty() ? "0" : s;
  }

  bool has_finite_coproducts() const override { return true; }
  FiniteCoproduct finite_coproduct(std::span<const FiniteAlgebra* const> factors) const override {
    std::vector<CommAlgebra> algebras;
    algebras.reserve(factors.size());
    for (const auto* f : factors) algebras.push_back(CommAlgebra::from_algebra(ring_, *f, false));
    std::vector<const CommAlgebra*> ptrs;
    for (const auto& a : algebras) ptrs.push_back(&a);
    auto cp = algebra_coproduct(ring_, ptrs);
    FiniteCoproduct out;
    out.algebra = cp.algebra.as_algebra();
    out.injections = std::move(cp.injections);
    for (std::size_t t = 0; t < cp.algebra.size(); ++t) out.labels.push_back(cp.algebra.name(t));
    return out;
  }

 private:
  poly::Arith<RingOps> arith(std::size_t gens) const { return poly::Arith<RingOps>(RingOps{ring_.get()}, gens); }

  RingPtr ring_;
};

}  // namespace

TheoryPresentation comm_algebra_theory(const FiniteRing& R) {
  if (!R.is_commutative()) throw Error("not-commutative", "cAlg needs a commutative base ring");
  std::string text = "theory cAlg_" + R.name() + " ops plus/2 zero/0 neg/1 times/2 one/0";
  for (std::size_t r = 0; r < R.size(); ++r) text += " " + scalar_op(r) + "/1";
  text +=
      " eqs plus(plus(x1,x2),x3)=plus(x1,plus(x2,x3)); plus(x1,x2)=plus(x2,x1); plus(zero,x1)=x1; "
      "plus(x1,neg(x1))=zero; times(times(x1,x2),x3)=times(x1,times(x2,x3)); times(x1,x2)=times(x2,x1); "
      "times(one,x1)=x1; times(x1,plus(x2,x3))=plus(times(x1,x2),times(x1,x3))";
  for (std::size_t r = 0; r < R.size(); ++r) {
    const auto s = scalar_op(r);
    text += "; " + s + "(plus(x1,x2))=plus(" + s + "(x1)," + s + "(x2))";
    text += "; " + s + "(times(x1,x2))=times(" + s + "(x1),x2)";
  }
  for (std::size_t r = 0; r < R.size(); ++r)
    for (std::size_t q = 0; q < R.size(); ++q) {
      text += "; plus(" + scalar_op(r) + "(x1)," + scalar_op(q) + "(x1))=" + scalar_op(R.add(r, q)) + "(x1)";
      text += "; " + scalar_op(r) + "(" + scalar_op(q) + "(x1))=" + scalar_op(R.mul(r, q)) + "(x1)";
    }
  text += "; " + scalar_op(R.one()) + "(x1)=x1";
  return parse_theory(text);
}

BackendPtr comm_algebra_backend(const RingPtr& ring) {
  if (!ring->is_commutative()) throw Error("not-commutative", "cAlg needs a commutative base ring");
  return std::make_shared<CommAlgebraBackend>(ring);
}

}  // namespace coalg
