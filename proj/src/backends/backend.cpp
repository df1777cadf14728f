#include "coalg/backends/backend.hpp"

#include "coalg/error.hpp"

namespace coalg {

VarietyBackend::VarietyBackend(std::string name, TheoryPresentation presentation)
    : name_(std::move(name)), presentation_(std::move(presentation)) {
  presentation_.validate();
}

FiniteCoproduct VarietyBackend::finite_coproduct(std::span<const FiniteAlgebra* const>) const {
  throw Error("capability-unsupported", "variety " + name_ + " has no finite coproducts of finite algebras");
}

Element VarietyBackend::nf(const Term& t, std::size_t gens) const {
  if (t.is_var()) {
    if (t.var < 1 || t.var > gens) throw Error("var-out-of-context", "x" + std::to_string(t.var) + " outside context");
    return free_generator(t.var - 1, gens);
  }
  const auto op = signature().index_of(t.op);
  if (signature().op(op).arity != t.args.size()) throw Error("arity-mismatch", "wrong argument count for " + t.op);
  std::vector<Element> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(nf(a, gens));
  return free_apply(op, args, gens);
}

Equation commutation_square(const OpDecl& sigma, const OpDecl& tau) {
  const auto n = sigma.arity, m = tau.arity;
  auto x = [m](std::size_t i, std::size_t j) { return Term::variable(i * m + j + 1); };
  std::vector<Term> rows, cols;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> args;
    for (std::size_t j = 0; j < m; ++j) args.push_back(x(i, j));
    rows.push_back(Term::apply(tau.name, std::move(args)));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Term> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back(x(i, j));
    cols.push_back(Term::apply(sigma.name, std::move(args)));
  }
  return Equation{n * m, Term::apply(sigma.name, std::move(rows)), Term::apply(tau.name, std::move(cols))};
}

const std::optional<CommutationWitness>& VarietyBackend::commutation_witness() const {
  std::call_once(commutation_once_, [this] {
    const auto& ops = signature().ops();
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i; j < ops.size(); ++j) {
        const auto sq = commutation_square(ops[i], ops[j]);
        const auto l = nf(sq.lhs, sq.context), r = nf(sq.rhs, sq.context);
        if (l == r) continue;
        std::vector<std::string> names;
        for (std::size_t k = 1; k <= sq.context; ++k) names.push_back("x" + std::to_string(k));
        commutation_ = CommutationWitness{ops[i].name, ops[j].name, free_show(l, names), free_show(r, names)};
        return;
      }
  });
  return commutation_;
}

void VarietyBackend::check_member(const FiniteAlgebra& alg) const {
  if (!(alg.signature() == signature()))
    throw Error("signature-mismatch", "algebra signature differs from variety " + name_);
  if (auto bad = check_theory(alg, presentation_)) {
    std::string w;
    for (auto v : bad->second.witness) w += (w.empty() ? "" : ",") + std::to_string(v);
    throw Error("not-in-variety", "equation " + to_string(presentation_.equations[bad->first]) + " of " + name_ +
                                      " fails at (" + w + ")");
  }
}

FiniteCoproduct biproduct(const Signature& sig, std::span<const FiniteAlgebra* const> factors,
                          const std::string& unit_op) {
  const auto n = factors.size();
  std::vector<std::size_t> sizes, units;
  std::size_t total = 1;
  for (const auto* f : factors) {
    sizes.push_back(f->size());
    units.push_back(f->apply(unit_op, {}));
    total *= f->size();
  }
  auto decode = [&](std::size_t idx) {
    std::vector<std::size_t> c(n);
    for (std::size_t k = n; k-- > 0;) {
      c[k] = idx % sizes[k];
      idx /= sizes[k];
    }
    return c;
  };
  auto encode = [&](const std::vector<std::size_t>& c) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < n; ++k) idx = idx * sizes[k] + c[k];
    return idx;
  };
  std::vector<std::vector<std::size_t>> coords(total);
  for (std::size_t i = 0; i < total; ++i) coords[i] = decode(i);
  FiniteCoproduct out{FiniteAlgebra::from_function(sig, total,
                                                   [&](std::size_t op, std::span<const std::size_t> args) {
                                                     std::vector<std::size_t> c(n), a(args.size());
                                                     for (std::size_t k = 0; k < n; ++k) {
                                                       for (std::size_t i = 0; i < args.size(); ++i)
                                                         a[i] = coords[args[i]][k];
                                                       c[k] = factors[k]->apply(op, a);
                                                     }
                                                     return encode(c);
                                                   }),
                      {},
                      {}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> inj;
    for (std::size_t a = 0; a < sizes[k]; ++a) {
      auto c = units;
      c[k] = a;
      inj.push_back(encode(c));
    }
    out.injections.push_back(std::move(inj));
  }
  for (std::size_t i = 0; i < total; ++i) {
    std::string s = "(";
    for (std::size_t k = 0; k < n; ++k) s += (k ? "," : "") + std::to_string(coords[i][k]);
    out.labels.push_back(s + ")");
  }
  return out;
}

}  // namespace coalg
