#include "coalg/algebra/finite_algebra.hpp"

#include <algorithm>

#include "coalg/error.hpp"

namespace coalg {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::size_t row_index(std::size_t size, std::span<const std::size_t> args) {
  std::size_t idx = 0;
  for (auto a : args) idx = idx * size + a;
  return idx;
}

// Odometer over {0..size-1}^n; returns false once exhausted.
bool next_tuple(std::vector<std::size_t>& t, std::size_t size) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < size) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(Signature sig, std::size_t size, std::vector<std::vector<std::size_t>> tables)
    : sig_(std::move(sig)), size_(size), tables_(std::move(tables)) {
  if (tables_.size() != sig_.size())
    throw Error("table-mismatch", "expected " + std::to_string(sig_.size()) + " operation tables");
  for (std::size_t i = 0; i < sig_.size(); ++i) {
    const auto arity = sig_.op(i).arity;
    if (size_ == 0 && arity == 0)
      throw Error("empty-carrier", "constant '" + sig_.op(i).name + "' forces a nonempty carrier");
    const auto expected = ipow(size_, arity);
    if (tables_[i].size() != expected)
      throw Error("table-mismatch", "table for '" + sig_.op(i).name + "' needs " + std::to_string(expected) +
                                        " entries, got " + std::to_string(tables_[i].size()));
    for (auto v : tables_[i])
      if (v >= size_) throw Error("table-mismatch", "table for '" + sig_.op(i).name + "' leaves the carrier");
  }
}

FiniteAlgebra FiniteAlgebra::from_function(
    Signature sig, std::size_t size,
    const std::function<std::size_t(std::size_t, std::span<const std::size_t>)>& op) {
  std::vector<std::vector<std::size_t>> tables(sig.size());
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const auto arity = sig.op(i).arity;
    if (size == 0 && arity > 0) continue;
    std::vector<std::size_t> t(arity, 0);
    tables[i].reserve(ipow(size, arity));
    do {
      tables[i].push_back(op(i, t));
    } while (next_tuple(t, size));
  }
  return FiniteAlgebra(std::move(sig), size, std::move(tables));
}

std::size_t FiniteAlgebra::apply(std::size_t op, std::span<const std::size_t> args) const {
  return tables_[op][row_index(size_, args)];
}

std::size_t evaluate(const FiniteAlgebra& alg, const Term& t, std::span<const std::size_t> env) {
  if (t.is_var()) {
    if (t.var < 1 || t.var > env.size()) throw Error("var-out-of-context", "unbound variable in evaluation");
    return env[t.var - 1];
  }
  const auto op = alg.signature().index_of(t.op);
  if (t.args.size() != alg.signature().op(op).arity)
    throw Error("signature-mismatch", "arity of '" + t.op + "' differs from the algebra");
  std::size_t buf[8];
  std::vector<std::size_t> big;
  std::span<std::size_t> vals;
  if (t.args.size() <= 8) {
    vals = std::span<std::size_t>(buf, t.args.size());
  } else {
    big.resize(t.args.size());
    vals = big;
  }
  for (std::size_t i = 0; i < t.args.size(); ++i) vals[i] = evaluate(alg, t.args[i], env);
  return alg.apply(op, vals);
}

std::function<std::size_t(std::span<const std::size_t>)> interpret_term(const Term& t, const FiniteAlgebra& alg,
                                                                          std::size_t context) {
  check_term(alg.signature(), t, context);
  return [t, &alg, context](std::span<const std::size_t> args) {
    if (args.size() != context) throw Error("var-out-of-context", "wrong number of arguments");
    return evaluate(alg, t, args);
  };
}

namespace {

// Postfix form of a term: variables push env[var-1], operations pop their
// arguments and push the table value.
struct Program {
  struct Step {
    bool is_var;
    std::size_t index;  // variable (0-based) or operation
    std::size_t arity;
  };
  std::vector<Step> steps;

  Program(const FiniteAlgebra& alg, const Term& t) { emit(alg, t); }

  void emit(const FiniteAlgebra& alg, const Term& t) {
    if (t.is_var()) {
      steps.push_back({true, t.var - 1, 0});
      return;
    }
    for (const auto& a : t.args) emit(alg, a);
    steps.push_back({false, alg.signature().index_of(t.op), t.args.size()});
  }

  std::size_t run(const FiniteAlgebra& alg, std::span<const std::size_t> env, std::vector<std::size_t>& stack) const {
    stack.clear();
    for (const auto& s : steps) {
      if (s.is_var) {
        stack.push_back(env[s.index]);
        continue;
      }
      const auto base = stack.size() - s.arity;
      const auto v = alg.apply(s.index, std::span<const std::size_t>(stack.data() + base, s.arity));
      stack.resize(base);
      stack.push_back(v);
    }
    return stack.back();
  }
};

}  // namespace

SatisfactionResult satisfies(const FiniteAlgebra& alg, const Equation& eq) {
  check_term(alg.signature(), eq.lhs, eq.context);
  check_term(alg.signature(), eq.rhs, eq.context);
  if (alg.size() == 0 && eq.context > 0) return {};
  const Program lhs(alg, eq.lhs), rhs(alg, eq.rhs);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> t(eq.context, 0);
  do {
    if (lhs.run(alg, t, stack) != rhs.run(alg, t, stack)) return {false, t};
  } while (next_tuple(t, alg.size()));
  return {};
}

std::optional<std::pair<std::size_t, SatisfactionResult>> check_theory(const FiniteAlgebra& alg,
                                                                      const TheoryPresentation& theory) {
  for (std::size_t i = 0; i < theory.equations.size(); ++i) {
    auto r = satisfies(alg, theory.equations[i]);
    if (!r.holds) return std::make_pair(i, r);
  }
  return std::nullopt;
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const std::size_t> table) {
  if (table.size() != a.size()) return false;
  for (auto v : table)
    if (v >= b.size()) return false;
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const auto arity = a.signature().op(op).arity;
    if (a.size() == 0 && arity > 0) continue;
    std::vector<std::size_t> t(arity, 0), img(arity);
    do {
      for (std::size_t i = 0; i < arity; ++i) img[i] = table[t[i]];
      if (table[a.apply(op, t)] != b.apply(op, img)) return false;
    } while (next_tuple(t, a.size()));
  }
  return true;
}

void for_each_hom(const FiniteAlgebra& a, const FiniteAlgebra& b,
                  const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (!(a.signature() == b.signature()))
    throw Error("signature-mismatch", "homomorphisms need a common signature");
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const auto& sig = a.signature();

  // Each operation instance (op, tuple) is checked as soon as every element it
  // touches has an image; the check is attached to the largest such element.
  struct Check {
    std::size_t op;
    std::vector<std::size_t> args;
    std::size_t result;
  };
  std::vector<std::vector<Check>> checks(n);
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const auto arity = sig.op(op).arity;
    if (n == 0 && arity > 0) continue;
    std::vector<std::size_t> t(arity, 0);
    do {
      Check c{op, t, a.apply(op, t)};
      std::size_t last = c.result;
      for (auto x : t) last = std::max(last, x);
      checks[last].push_back(std::move(c));
    } while (next_tuple(t, n));
  }

  std::vector<std::size_t> table(n, 0);
  std::vector<std::size_t> img;
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (stop) return;
    if (i == n) {
      if (!visit(table)) stop = true;
      return;
    }
    for (std::size_t v = 0; v < m && !stop; ++v) {
      table[i] = v;
      bool ok = true;
      for (const auto& c : checks[i]) {
        img.resize(c.args.size());
        for (std::size_t k = 0; k < c.args.size(); ++k) img[k] = table[c.args[k]];
        if (table[c.result] != b.apply(c.op, img)) {
          ok = false;
          break;
        }
      }
      if (ok) extend(i + 1);
    }
  };
  if (n > 0 && m == 0) return;
  extend(0);
}

std::vector<FiniteHom> enumerate_homs(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::vector<FiniteHom> out;
  for_each_hom(a, b, [&](std::span<const std::size_t> t) {
    out.push_back(FiniteHom{{t.begin(), t.end()}});
    return true;
  });
  return out;
}

ProductAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.signature() == b.signature())) throw Error("signature-mismatch", "product needs a common signature");
  const std::size_t nb = b.size();
  auto alg = FiniteAlgebra::from_function(a.signature(), a.size() * nb,
                                          [&](std::size_t op, std::span<const std::size_t> args) {
                                            std::vector<std::size_t> l(args.size()), r(args.size());
                                            for (std::size_t i = 0; i < args.size(); ++i) {
                                              l[i] = args[i] / nb;
                                              r[i] = args[i] % nb;
                                            }
                                            return a.apply(op, l) * nb + b.apply(op, r);
                                          });
  ProductAlgebra p{std::move(alg), {}, {}};
  for (std::size_t i = 0; i < p.algebra.size(); ++i) {
    p.first.table.push_back(i / nb);
    p.second.table.push_back(i % nb);
  }
  return p;
}

FiniteAlgebra terminal_algebra(const Signature& sig) {
  return FiniteAlgebra::from_function(sig, 1, [](std::size_t, std::span<const std::size_t>) { return 0; });
}

std::set<std::size_t> subalgebra_generated(const FiniteAlgebra& alg, const std::set<std::size_t>& seed) {
  for (auto s : seed)
    if (s >= alg.size()) throw Error("out-of-carrier", "seed element outside the carrier");
  std::set<std::size_t> closed = seed;
  const auto& sig = alg.signature();
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> elems(closed.begin(), closed.end());
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const auto arity = sig.op(op).arity;
      if (arity > 0 && elems.empty()) continue;
      std::vector<std::size_t> idx(arity, 0), args(arity);
      do {
        for (std::size_t i = 0; i < arity; ++i) args[i] = elems[idx[i]];
        if (closed.insert(alg.apply(op, args)).second) grew = true;
      } while (next_tuple(idx, elems.size()));
    }
  }
  return closed;
}

FiniteAlgebra restrict_to(const FiniteAlgebra& alg, const std::set<std::size_t>& closed_subset) {
  std::vector<std::size_t> elems(closed_subset.begin(), closed_subset.end());
  std::vector<std::size_t> pos(alg.size(), alg.size());
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  return FiniteAlgebra::from_function(alg.signature(), elems.size(),
                                      [&](std::size_t op, std::span<const std::size_t> args) {
                                        std::vector<std::size_t> orig(args.size());
                                        for (std::size_t i = 0; i < args.size(); ++i) orig[i] = elems[args[i]];
                                        auto r = pos[alg.apply(op, orig)];
                                        if (r == alg.size())
                                          throw Error("not-closed", "subset is not closed under operations");
                                        return r;
                                      });
}

}  // namespace coalg
