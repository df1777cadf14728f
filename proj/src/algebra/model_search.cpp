#include "coalg/algebra/model_search.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

#include "coalg/error.hpp"

namespace coalg {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

struct PartialTables {
  std::size_t size;
  std::vector<std::size_t> arity;
  std::vector<std::vector<std::size_t>> cells;

  std::size_t lookup(std::size_t op, std::span<const std::size_t> args) const {
    std::size_t idx = 0;
    for (auto a : args) idx = idx * size + a;
    return cells[op][idx];
  }
};

struct CompiledTerm {
  bool is_var;
  std::size_t var_or_op;
  std::vector<CompiledTerm> args;
};

CompiledTerm compile(const Signature& sig, const Term& t) {
  if (t.is_var()) return {true, t.var - 1, {}};
  CompiledTerm c{false, sig.index_of(t.op), {}};
  for (const auto& a : t.args) c.args.push_back(compile(sig, a));
  return c;
}

std::size_t eval_partial(const PartialTables& pt, const CompiledTerm& t, std::span<const std::size_t> env) {
  if (t.is_var) return env[t.var_or_op];
  std::size_t buf[8];
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    buf[i] = eval_partial(pt, t.args[i], env);
    if (buf[i] == kUnset) return kUnset;
  }
  return pt.lookup(t.var_or_op, std::span<const std::size_t>(buf, t.args.size()));
}

bool next_tuple(std::vector<std::size_t>& t, std::size_t size) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < size) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

FiniteAlgebra canonical_relabelling(const FiniteAlgebra& alg) {
  const auto n = alg.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<std::vector<std::size_t>>> best;
  std::vector<std::size_t> inv(n);
  do {
    // perm maps old label -> new label.
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    std::vector<std::vector<std::size_t>> tables;
    for (std::size_t op = 0; op < alg.signature().size(); ++op) {
      const auto arity = alg.signature().op(op).arity;
      std::vector<std::size_t> t(arity, 0), old(arity);
      std::vector<std::size_t> tab;
      if (n == 0 && arity > 0) {
        tables.push_back(tab);
        continue;
      }
      do {
        for (std::size_t k = 0; k < arity; ++k) old[k] = inv[t[k]];
        tab.push_back(perm[alg.apply(op, old)]);
      } while (next_tuple(t, n));
      tables.push_back(std::move(tab));
    }
    if (!best || tables < *best) best = std::move(tables);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FiniteAlgebra(alg.signature(), n, std::move(*best));
}

std::vector<FiniteAlgebra> find_models(const TheoryPresentation& theory, std::size_t size, bool up_to_iso) {
  const auto& sig = theory.signature;
  if (size > 6) throw Error("cap-exceeded", "model search is limited to carriers of size <= 6");
  for (const auto& op : sig.ops())
    if (op.arity > 3) throw Error("cap-exceeded", "model search handles arities <= 3");
  if (size == 0) {
    for (const auto& op : sig.ops())
      if (op.arity == 0) return {};
    return {FiniteAlgebra(sig, 0, std::vector<std::vector<std::size_t>>(sig.size()))};
  }

  PartialTables pt{size, {}, {}};
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (op, cell)
  for (std::size_t op = 0; op < sig.size(); ++op) {
    std::size_t cells = 1;
    for (std::size_t k = 0; k < sig.op(op).arity; ++k) cells *= size;
    pt.arity.push_back(sig.op(op).arity);
    pt.cells.emplace_back(cells, kUnset);
    for (std::size_t c = 0; c < cells; ++c) order.emplace_back(op, c);
  }

  struct Instance {
    std::size_t eq;
    std::vector<std::size_t> env;
  };
  std::vector<std::pair<CompiledTerm, CompiledTerm>> eqs;
  std::vector<Instance> instances;
  for (std::size_t e = 0; e < theory.equations.size(); ++e) {
    const auto& eq = theory.equations[e];
    eqs.emplace_back(compile(sig, eq.lhs), compile(sig, eq.rhs));
    std::vector<std::size_t> t(eq.context, 0);
    do {
      instances.push_back({e, t});
    } while (next_tuple(t, size));
  }

  auto consistent = [&] {
    for (const auto& inst : instances) {
      auto l = eval_partial(pt, eqs[inst.eq].first, inst.env);
      if (l == kUnset) continue;
      auto r = eval_partial(pt, eqs[inst.eq].second, inst.env);
      if (r != kUnset && l != r) return false;
    }
    return true;
  };

  std::vector<FiniteAlgebra> found;
  std::map<std::vector<std::vector<std::size_t>>, bool> seen;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == order.size()) {
      FiniteAlgebra alg(sig, size, pt.cells);
      if (up_to_iso) {
        alg = canonical_relabelling(alg);
        if (!seen.emplace(alg.tables(), true).second) return;
      }
      found.push_back(std::move(alg));
      return;
    }
    auto [op, cell] = order[k];
    for (std::size_t v = 0; v < size; ++v) {
      pt.cells[op][cell] = v;
      if (consistent()) fill(k + 1);
    }
    pt.cells[op][cell] = kUnset;
  };
  fill(0);
  std::sort(found.begin(), found.end(), [](const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.tables() < b.tables();
  });
  return found;
}

}  // namespace coalg
