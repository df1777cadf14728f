#include "coalg/hopf/bialgebra.hpp"

#include <algorithm>
#include <set>

#include "coalg/backends/registry.hpp"
#include "coalg/coalgebra/canonical.hpp"
#include "coalg/error.hpp"

namespace coalg {

std::optional<Table> extend_algebra_map(const CommAlgebra& a, const CommAlgebra& b,
                                        const std::map<std::size_t, std::size_t>& seeds) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  Table f(a.size(), kUnset);
  std::vector<std::size_t> known;
  std::vector<std::size_t> queue;
  bool consistent = true;
  auto assign = [&](std::size_t x, std::size_t y) {
    if (f[x] == kUnset) {
      f[x] = y;
      queue.push_back(x);
    } else if (f[x] != y) {
      consistent = false;
    }
  };
  assign(a.one(), b.one());
  assign(a.zero(), b.zero());
  for (const auto& [x, y] : seeds) {
    if (x >= a.size() || y >= b.size()) return std::nullopt;
    assign(x, y);
  }
  while (!queue.empty() && consistent) {
    const auto x = queue.back();
    queue.pop_back();
    known.push_back(x);
    for (std::size_t r = 0; r < a.ring()->size(); ++r) assign(a.scale(r, x), b.scale(r, f[x]));
    for (auto y : known) {
      assign(a.add(x, y), b.add(f[x], f[y]));
      assign(a.mul(x, y), b.mul(f[x], f[y]));
    }
  }
  if (!consistent || std::find(f.begin(), f.end(), kUnset) != f.end()) return std::nullopt;
  return f;
}

namespace {

std::size_t sum_of(const AlgebraTensor& t, const TensorSum& terms) {
  std::size_t acc = t.product.group().zero();
  for (const auto& [b, c] : terms) {
    if (b >= t.product.left_size() || c >= t.product.right_size())
      throw Error("not-a-bialgebra", "tensor term outside the algebra");
    acc = t.product.group().add(acc, t.product.pure(b, c));
  }
  return acc;
}

// Coordinates of every element in `basis`, if it is an R-basis.
std::optional<std::vector<std::vector<std::size_t>>> coordinates(const CommAlgebra& a,
                                                                 const std::vector<std::size_t>& basis) {
  const auto& R = *a.ring();
  std::vector<std::vector<std::size_t>> out(a.size());
  std::vector<std::size_t> c(basis.size(), R.zero());
  std::size_t hit = 0;
  while (true) {
    std::size_t x = a.zero();
    for (std::size_t i = 0; i < basis.size(); ++i) x = a.add(x, a.scale(c[i], basis[i]));
    if (!out[x].empty() || (basis.empty() && hit > 0)) return std::nullopt;
    out[x] = c;
    ++hit;
    std::size_t p = c.size();
    while (p > 0 && ++c[p - 1] == R.size()) c[--p] = 0;
    if (p == 0) break;
  }
  if (hit != a.size()) return std::nullopt;
  return out;
}

Table required(std::optional<Table> f, const std::string& what) {
  if (!f) throw Error("not-a-bialgebra", what + " does not extend to an algebra map");
  return std::move(*f);
}

}  // namespace

FiniteBialgebra::FiniteBialgebra(std::string name, CommAlgebra algebra, const std::map<std::size_t, TensorSum>& delta,
                                 const std::map<std::size_t, std::size_t>& counit,
                                 const std::optional<std::map<std::size_t, std::size_t>>& antipode,
                                 const std::optional<std::vector<std::size_t>>& basis)
    : name_(std::move(name)),
      algebra_(std::move(algebra)),
      tensor_(std::make_shared<const AlgebraTensor>(algebra_tensor(algebra_, algebra_))) {
  const auto& A = algebra_;
  const auto& T = *tensor_;
  const auto& R = *A.ring();
  std::map<std::size_t, std::size_t> delta_seeds;
  for (const auto& [a, terms] : delta) delta_seeds.emplace(a, sum_of(T, terms));
  delta_ = required(extend_algebra_map(A, T.algebra, delta_seeds), "comultiplication");
  counit_ = required(extend_algebra_map(A, CommAlgebra::base(A.ring()), counit), "counit");
  if (antipode) antipode_ = required(extend_algebra_map(A, A, *antipode), "antipode");

  auto law = [&](std::string name, auto&& body) {
    LawCheck check{std::move(name), true, ""};
    try {
      for (std::size_t a = 0; a < A.size() && check.ok; ++a)
        if (!body(a)) {
          check.ok = false;
          check.witness = A.name(a);
        }
    } catch (const Error& e) {
      check.ok = false;
      check.witness = e.what();
    }
    laws_.push_back(std::move(check));
  };

  const bool delta_hom = is_algebra_hom(A, T.algebra, delta_);
  const bool counit_hom = is_algebra_hom(A, CommAlgebra::base(A.ring()), counit_);
  laws_.push_back({"comultiplication is an algebra map", delta_hom, ""});
  laws_.push_back({"counit is an algebra map", counit_hom, ""});

  const auto& P = T.product;
  if (basis) {
    const auto coeffs = coordinates(A, *basis);
    if (!coeffs) throw Error("not-a-basis", name_ + ": the given elements are not an R-basis");
    const auto k = basis->size();
    // Coordinates of A⊗A in the basis e_i⊗e_j.
    std::vector<std::vector<std::size_t>> tcoords(T.algebra.size());
    std::vector<std::size_t> c(k * k, R.zero());
    while (true) {
      std::size_t t = P.group().zero();
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          t = P.group().add(t, T.algebra.scale(c[i * k + j], P.pure((*basis)[i], (*basis)[j])));
      if (!tcoords[t].empty()) throw Error("not-a-basis", name_ + ": tensor square is not free on the basis");
      tcoords[t] = c;
      std::size_t p = c.size();
      while (p > 0 && ++c[p - 1] == R.size()) c[--p] = 0;
      if (p == 0) break;
    }
    LawCheck check{"coassociativity", true, ""};
    for (std::size_t a = 0; a < k && check.ok; ++a) {
      const auto& ca = tcoords[delta_[(*basis)[a]]];
      for (std::size_t i = 0; i < k && check.ok; ++i)
        for (std::size_t j = 0; j < k && check.ok; ++j)
          for (std::size_t l = 0; l < k && check.ok; ++l) {
            std::size_t lhs = R.zero(), rhs = R.zero();
            for (std::size_t m = 0; m < k; ++m) {
              const auto& cm = tcoords[delta_[(*basis)[m]]];
              lhs = R.add(lhs, R.mul(ca[m * k + l], cm[i * k + j]));
              rhs = R.add(rhs, R.mul(ca[i * k + m], cm[j * k + l]));
            }
            if (lhs != rhs) {
              check.ok = false;
              check.witness = A.name((*basis)[a]);
            }
          }
    }
    laws_.push_back(std::move(check));
  } else {
    if (T.algebra.size() * A.size() > 4096)
      throw Error("cap-exceeded", name_ + ": triple tensor too large without a basis");
    std::vector<BalancingPair> balancing;
    for (std::size_t r = 0; r < R.size(); ++r) {
      Table f(T.algebra.size()), g(A.size());
      for (std::size_t x = 0; x < f.size(); ++x) f[x] = T.algebra.scale(r, x);
      for (std::size_t y = 0; y < g.size(); ++y) g[y] = A.scale(r, y);
      balancing.emplace_back(std::move(f), std::move(g));
    }
    const TensorGroup triple(T.algebra.group(), A.group(), balancing);
    std::optional<Table> left, right;
    law("coassociativity", [&](std::size_t a) {
      if (!left) {
        left = P.induced(triple.group(), [&](std::size_t b, std::size_t c) { return triple.pure(delta_[b], c); });
        right = P.induced(triple.group(), [&](std::size_t b, std::size_t c) {
          std::size_t acc = triple.group().zero();
          for (const auto& [d, e] : P.terms(delta_[c])) acc = triple.group().add(acc, triple.pure(P.pure(b, d), e));
          return acc;
        });
      }
      return (*left)[delta_[a]] == (*right)[delta_[a]];
    });
  }

  std::optional<Table> counit_left, counit_right;
  law("counit", [&](std::size_t a) {
    if (!counit_left) {
      counit_left = P.induced(A.group(), [&](std::size_t b, std::size_t c) { return A.scale(counit_[b], c); });
      counit_right = P.induced(A.group(), [&](std::size_t b, std::size_t c) { return A.scale(counit_[c], b); });
    }
    return (*counit_left)[delta_[a]] == a && (*counit_right)[delta_[a]] == a;
  });

  if (antipode_) {
    const auto& S = *antipode_;
    std::optional<Table> s_left, s_right;
    law("antipode", [&](std::size_t a) {
      if (!s_left) {
        s_left = P.induced(A.group(), [&](std::size_t b, std::size_t c) { return A.mul(S[b], c); });
        s_right = P.induced(A.group(), [&](std::size_t b, std::size_t c) { return A.mul(b, S[c]); });
      }
      const auto unit = A.unit(counit_[a]);
      return (*s_left)[delta_[a]] == unit && (*s_right)[delta_[a]] == unit;
    });
  }

  for (const auto& l : laws_)
    if (!l.ok)
      throw Error("not-a-bialgebra", name_ + ": " + l.law + " fails" + (l.witness.empty() ? "" : " at " + l.witness));
}

std::string FiniteBialgebra::show_delta(std::size_t a) const { return tensor_->algebra.name(delta_[a]); }

namespace {

std::string linear_name(const FiniteRing& R, const std::vector<std::size_t>& coeffs,
                        const std::vector<std::string>& basis) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == R.zero()) continue;
    if (!s.empty()) s += "+";
    s += coeffs[i] == R.one() ? basis[i] : std::to_string(coeffs[i]) + "*" + basis[i];
  }
  return s.empty() ? "0" : s;
}

// Free R-module on k basis vectors with a bilinear product given on the
// basis; element index is the coefficient vector in base |R|, first
// coordinate least significant.
CommAlgebra free_algebra_on_basis(const RingPtr& ring, std::size_t k, const std::vector<std::string>& basis,
                                  const std::function<std::vector<std::size_t>(std::size_t, std::size_t)>& basis_mul,
                                  std::size_t one_basis) {
  const auto& R = *ring;
  const auto q = R.size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= q;
  auto coeffs = [&](std::size_t x) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = x % q;
      x /= q;
    }
    return c;
  };
  auto index = [&](const std::vector<std::size_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = k; i-- > 0;) x = x * q + c[i];
    return x;
  };
  std::vector<std::vector<std::size_t>> cs(n);
  for (std::size_t x = 0; x < n; ++x) cs[x] = coeffs(x);
  std::vector<std::size_t> add(n * n), mul(n * n), scalar(q * n);
  std::vector<std::vector<std::size_t>> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = basis_mul(i, j);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<std::size_t> s(k), p(k, R.zero());
      for (std::size_t i = 0; i < k; ++i) s[i] = R.add(cs[x][i], cs[y][i]);
      for (std::size_t i = 0; i < k; ++i) {
        if (cs[x][i] == R.zero()) continue;
        for (std::size_t j = 0; j < k; ++j) {
          const auto c = R.mul(cs[x][i], cs[y][j]);
          if (c == R.zero()) continue;
          const auto& bij = table[i * k + j];
          for (std::size_t l = 0; l < k; ++l) p[l] = R.add(p[l], R.mul(c, bij[l]));
        }
      }
      add[x * n + y] = index(s);
      mul[x * n + y] = index(p);
    }
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::size_t> c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = R.mul(r, cs[x][i]);
      scalar[r * n + x] = index(c);
    }
  std::vector<std::size_t> one(k, R.zero());
  one[one_basis] = R.one();
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) names[x] = linear_name(R, cs[x], basis);
  return CommAlgebra(ring, FiniteAbelianGroup::from_table(n, add), std::move(mul), std::move(scalar), index(one),
                     std::move(names));
}

std::size_t basis_element(const FiniteRing& R, std::size_t k, std::size_t i) {
  std::size_t x = 0;
  for (std::size_t j = k; j-- > 0;) x = x * R.size() + (j == i ? R.one() : R.zero());
  return x;
}

}  // namespace

FiniteAlgebra cyclic_group(std::size_t n) {
  const auto sig = group_backend()->signature();
  return FiniteAlgebra::from_function(sig, n, [n, &sig](std::size_t op, std::span<const std::size_t> args) {
    const auto& name = sig.op(op).name;
    if (name == "m") return (args[0] + args[1]) % n;
    if (name == "e") return std::size_t{0};
    return (n - args[0]) % n;
  });
}

FiniteBialgebra group_algebra(const RingPtr& ring, const FiniteAlgebra& g, std::vector<std::string> names,
                              std::string name) {
  group_backend()->check_member(g);
  const auto& R = *ring;
  const auto& sig = g.signature();
  const auto m = sig.index_of("m"), e = sig.index_of("e"), inv = sig.index_of("i");
  const auto k = g.size();
  const auto unit = g.apply(e, {});
  if (names.empty()) {
    std::size_t next = 1;
    for (std::size_t x = 0; x < k; ++x) names.push_back(x == unit ? "1" : "g" + std::to_string(next++));
  }
  if (names.size() != k) throw Error("bad-names", "one name per group element is required");
  auto A = free_algebra_on_basis(
      ring, k, names,
      [&](std::size_t i, std::size_t j) {
        std::vector<std::size_t> v(k, R.zero());
        v[g.apply(m, std::vector<std::size_t>{i, j})] = R.one();
        return v;
      },
      unit);
  std::map<std::size_t, TensorSum> delta;
  std::map<std::size_t, std::size_t> counit, antipode;
  for (std::size_t x = 0; x < k; ++x) {
    const auto bx = basis_element(R, k, x);
    delta[bx] = {{bx, bx}};
    counit[bx] = R.one();
    antipode[bx] = basis_element(R, k, g.apply(inv, std::vector<std::size_t>{x}));
  }
  if (name.empty()) name = R.name() + "[G" + std::to_string(k) + "]";
  std::vector<std::size_t> basis;
  for (std::size_t x = 0; x < k; ++x) basis.push_back(basis_element(R, k, x));
  return FiniteBialgebra(std::move(name), std::move(A), delta, counit, antipode, basis);
}

FiniteBialgebra truncated_polynomial(const RingPtr& ring, std::size_t n, std::string var, std::string name) {
  if (n < 2) throw Error("bad-degree", "truncation degree must be at least 2");
  const auto& R = *ring;
  std::vector<std::string> basis{"1", var};
  for (std::size_t i = 2; i < n; ++i) basis.push_back(var + "^" + std::to_string(i));
  auto A = free_algebra_on_basis(
      ring, n, basis,
      [&](std::size_t i, std::size_t j) {
        std::vector<std::size_t> v(n, R.zero());
        if (i + j < n) v[i + j] = R.one();
        return v;
      },
      0);
  const auto one = basis_element(R, n, 0);
  const auto x = basis_element(R, n, 1);
  std::map<std::size_t, TensorSum> delta{{x, {{x, one}, {one, x}}}};
  std::map<std::size_t, std::size_t> counit{{x, R.zero()}};
  std::map<std::size_t, std::size_t> antipode{{x, A.neg(x)}};
  if (name.empty()) name = R.name() + "[" + var + "]/(" + var + "^" + std::to_string(n) + ")";
  std::vector<std::size_t> powers;
  for (std::size_t i = 0; i < n; ++i) powers.push_back(basis_element(R, n, i));
  return FiniteBialgebra(std::move(name), std::move(A), delta, counit, antipode, powers);
}

std::vector<std::size_t> group_like(const FiniteBialgebra& h) {
  std::vector<std::size_t> out;
  const auto& P = h.tensor().product;
  for (std::size_t a = 0; a < h.size(); ++a)
    if (h.delta(a) == P.pure(a, a) && h.counit(a) == h.ring()->one()) out.push_back(a);
  return out;
}

std::vector<std::size_t> primitive(const FiniteBialgebra& h) {
  std::vector<std::size_t> out;
  const auto& P = h.tensor().product;
  const auto one = h.algebra().one();
  for (std::size_t a = 0; a < h.size(); ++a)
    if (h.delta(a) == P.group().add(P.pure(a, one), P.pure(one, a))) out.push_back(a);
  return out;
}

ClosureCheck check_closure(const FiniteBialgebra& h) {
  ClosureCheck out;
  const auto& A = h.algebra();
  const auto gl = group_like(h);
  const auto pr = primitive(h);
  const std::set<std::size_t> gs(gl.begin(), gl.end()), ps(pr.begin(), pr.end());
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag) out.witness = why;
    flag = false;
  };
  if (!gs.count(A.one())) fail(out.submonoid, "1 is not group-like");
  for (auto a : gl)
    for (auto b : gl)
      if (!gs.count(A.mul(a, b))) fail(out.submonoid, A.name(a) + "*" + A.name(b) + " is not group-like");
  if (!ps.count(A.zero())) fail(out.submodule, "0 is not primitive");
  for (auto a : pr) {
    for (auto b : pr)
      if (!ps.count(A.add(a, b))) fail(out.submodule, A.name(a) + "+" + A.name(b) + " is not primitive");
    for (std::size_t r = 0; r < h.ring()->size(); ++r)
      if (!ps.count(A.scale(r, a))) fail(out.submodule, std::to_string(r) + "*" + A.name(a) + " is not primitive");
  }
  return out;
}

namespace {

Term var(std::size_t i) { return Term::variable(i); }

// Σ ν1(b)·ν2(c) over the stored terms of a tensor element.
Element transport(const FiniteBialgebra& h, const Coproduct& cp, std::size_t t) {
  const auto& obj = *cp.object();
  Element acc = obj.apply("zero", {});
  for (const auto& [b, c] : h.tensor().product.terms(t)) {
    const std::vector<Element> factors{cp.injection(0)(Element::index(b)), cp.injection(1)(Element::index(c))};
    const std::vector<Element> sum{acc, obj.apply("times", factors)};
    acc = obj.apply("plus", sum);
  }
  return acc;
}

Element ring_point(const Coproduct& empty, std::size_t r) {
  const auto& obj = *empty.object();
  const std::vector<Element> one{obj.apply("one", {})};
  return obj.apply(scalar_op(r), one);
}

}  // namespace

BialgebraEncoding encode_bialgebra(const FiniteBialgebra& h) {
  const auto backend = comm_algebra_backend(h.ring());
  const auto& A = h.algebra();
  const auto carrier = CarrierObject::finite(backend, A.as_algebra(), A.names());
  const auto two = copower(carrier, 2);
  const auto none = copower(carrier, 0);
  std::vector<Element> delta, counit;
  for (std::size_t a = 0; a < A.size(); ++a) {
    delta.push_back(transport(h, two, h.delta(a)));
    counit.push_back(ring_point(none, h.counit(a)));
  }
  const Hom delta_hom(carrier, two.object(), delta);
  const Hom counit_hom(carrier, none.object(), counit);

  const auto mon = monoid_backend()->presentation();
  auto psi = make_morphism("group-like", mon, backend,
                           {{"m", Term::apply("times", {var(1), var(2)})}, {"e", Term::apply("one")}});
  Coalgebra multiplicative(h.name() + "/Mon", mon, carrier, {{"m", delta_hom}, {"e", counit_hom}});

  const bool hopf = h.antipode().has_value();
  const auto additive_theory = hopf ? abelian_group_backend()->presentation() : comm_monoid_backend()->presentation();
  std::map<std::string, Term> assignment;
  std::map<std::string, Hom> coops;
  if (hopf) {
    std::vector<Element> anti;
    for (auto s : *h.antipode()) anti.push_back(Element::index(s));
    assignment = {{"plus", Term::apply("plus", {var(1), var(2)})},
                  {"zero", Term::apply("zero")},
                  {"neg", Term::apply("neg", {var(1)})}};
    coops = {{"plus", delta_hom}, {"zero", counit_hom}, {"neg", Hom(carrier, carrier, std::move(anti))}};
  } else {
    assignment = {{"m", Term::apply("plus", {var(1), var(2)})}, {"e", Term::apply("zero")}};
    coops = {{"m", delta_hom}, {"e", counit_hom}};
  }
  auto phi = make_morphism("primitive", additive_theory, backend, std::move(assignment));
  Coalgebra additive(h.name() + (hopf ? "/Ab" : "/cMon"), additive_theory, carrier, std::move(coops));
  return {std::move(multiplicative), std::move(psi), std::move(additive), std::move(phi)};
}

ClassicalComparison gphi_matches_classical(const FiniteBialgebra& h, std::size_t max_carrier, std::size_t max_tensor) {
  if (h.size() > max_carrier || h.tensor().algebra.size() > max_tensor)
    throw Error("cap-exceeded", h.name() + " has " + std::to_string(h.size()) + " elements and a tensor square of " +
                                    std::to_string(h.tensor().algebra.size()));
  const auto enc = encode_bialgebra(h);
  ClassicalComparison out;
  out.group_like_classical = group_like(h);
  out.primitive_classical = primitive(h);
  for (const auto& e : g_phi(enc.psi, enc.multiplicative).members) out.group_like_abstract.push_back(e.as_index());
  for (const auto& e : g_phi(enc.phi, enc.additive).members) out.primitive_abstract.push_back(e.as_index());
  return out;
}

namespace {

struct Stored {
  std::string name;
  std::function<FiniteBialgebra()> make;
};

const std::vector<Stored>& stored() {
  static const std::vector<Stored> list{
      {"F2C2", [] { return group_algebra(builtin_ring("Z2"), cyclic_group(2), {"1", "x"}, "F2C2"); }},
      {"Z3C2", [] { return group_algebra(builtin_ring("Z3"), cyclic_group(2), {"1", "g"}, "Z3C2"); }},
      {"F2x2", [] { return truncated_polynomial(builtin_ring("Z2"), 2, "x", "F2x2"); }},
      {"F2C3", [] { return group_algebra(builtin_ring("Z2"), cyclic_group(3), {"1", "g", "g2"}, "F2C3"); }},
      {"Z4C2", [] { return group_algebra(builtin_ring("Z4"), cyclic_group(2), {"1", "g"}, "Z4C2"); }},
      {"F2epsC2", [] { return group_algebra(builtin_ring("F2eps"), cyclic_group(2), {"1", "g"}, "F2epsC2"); }},
      {"Z2C1", [] { return group_algebra(builtin_ring("Z2"), cyclic_group(1), {"1"}, "Z2C1"); }},
      {"Z3C1", [] { return group_algebra(builtin_ring("Z3"), cyclic_group(1), {"1"}, "Z3C1"); }},
  };
  return list;
}

}  // namespace

FiniteBialgebra stored_bialgebra(const std::string& name) {
  for (const auto& s : stored())
    if (s.name == name) return s.make();
  throw Error("unknown-bialgebra", "no stored bialgebra '" + name + "'");
}

std::vector<std::string> stored_bialgebra_names() {
  std::vector<std::string> out;
  for (const auto& s : stored()) out.push_back(s.name);
  return out;
}

}  // namespace coalg
