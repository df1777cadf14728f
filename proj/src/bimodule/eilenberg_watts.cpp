#include "coalg/bimodule/eilenberg_watts.hpp"

#include <algorithm>
#include <set>

#include "coalg/error.hpp"

namespace coalg {

namespace {

constexpr std::size_t kLiteralKernelCap = 4096;
constexpr std::size_t kStreamedKernelCap = 65536;

BijectionCheck match(const std::vector<Table>& left, const std::vector<Table>& right,
                     const std::function<Table(const Table&)>& phi) {
  BijectionCheck out;
  out.left_count = left.size();
  out.right_count = right.size();
  std::vector<bool> hit(right.size(), false);
  for (std::size_t i = 0; i < left.size(); ++i) {
    Table image;
    try {
      image = phi(left[i]);
    } catch (const Error& e) {
      out.ok = false;
      out.failure = "image of map #" + std::to_string(i) + " is undefined: " + e.what();
      return out;
    }
    auto it = std::lower_bound(right.begin(), right.end(), image);
    if (it == right.end() || *it != image) {
      out.ok = false;
      out.failure = "image of map #" + std::to_string(i) + " is not a morphism of the target hom-set";
      return out;
    }
    const auto j = static_cast<std::size_t>(it - right.begin());
    if (hit[j]) {
      out.ok = false;
      out.failure = "not injective: two maps hit target #" + std::to_string(j);
      return out;
    }
    hit[j] = true;
  }
  const auto missed = std::find(hit.begin(), hit.end(), false);
  if (missed != hit.end()) {
    out.ok = false;
    out.failure = "not surjective: target #" + std::to_string(missed - hit.begin()) + " is missed";
  }
  return out;
}

Table after(const Table& g, const Table& f) {
  Table h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

}  // namespace

AdjunctionReport check_tensor_hom_adjunction(const Bimodule& m, const FiniteModule& x, const FiniteModule& y,
                                             const std::vector<FiniteModule>& sources,
                                             const std::vector<FiniteModule>& targets) {
  const auto t = tensor(m, x);
  const auto h = hom_module(m, y);
  auto transpose_with = [&](const TensorGroup& product, const HomModule& hm, const Table& f, std::size_t xs) {
    Table g(xs);
    for (std::size_t v = 0; v < xs; ++v) {
      Table col(m.size());
      for (std::size_t a = 0; a < m.size(); ++a) col[a] = f[product.pure(a, v)];
      g[v] = hm.index_of(col);
    }
    return g;
  };
  auto transpose = [&](const Table& f) { return transpose_with(t.product, h, f, x.size()); };

  AdjunctionReport report;
  const auto left = module_homs(t.module, y);
  const auto right = module_homs(x, h.module);
  report.bijection = match(left, right, transpose);
  if (!report.bijection.ok) return report;

  // The inverse transpose recovers f.
  for (const auto& f : left) {
    const auto g = transpose(f);
    const auto back = t.product.induced(y.group(), [&](std::size_t a, std::size_t v) { return h.maps[g[v]][a]; });
    if (back != f) {
      report.bijection.ok = false;
      report.bijection.failure = "inverse transpose does not recover the map";
      return report;
    }
  }

  for (const auto& x2 : sources) {
    if (!same_ring(x2.ring(), x.ring())) throw Error("ring-mismatch", "naturality source over another ring");
    const auto t2 = tensor(m, x2);
    for (const auto& u : module_homs(x2, x)) {
      const auto mu = t2.product.induced(t.module.group(), [&](std::size_t a, std::size_t v) { return t.product.pure(a, u[v]); });
      for (const auto& f : left) {
        ++report.naturality_squares;
        if (transpose_with(t2.product, h, after(f, mu), x2.size()) != after(transpose(f), u)) {
          report.natural = false;
          report.failure = "naturality in X fails";
          return report;
        }
      }
    }
  }
  for (const auto& y2 : targets) {
    if (!same_ring(y2.ring(), y.ring())) throw Error("ring-mismatch", "naturality target over another ring");
    const auto h2 = hom_module(m, y2);
    for (const auto& v : module_homs(y, y2)) {
      Table hv(h.maps.size());
      for (std::size_t i = 0; i < h.maps.size(); ++i) hv[i] = h2.index_of(after(v, h.maps[i]));
      for (const auto& f : left) {
        ++report.naturality_squares;
        if (transpose_with(t.product, h2, after(v, f), x.size()) != after(hv, transpose(f))) {
          report.natural = false;
          report.failure = "naturality in Y fails";
          return report;
        }
      }
    }
  }
  return report;
}

LeftAdjointResult left_adjoint_via_presentation(const Bimodule& m, const FiniteModule& a) {
  if (!same_ring(m.right_ring(), a.ring()) || a.side() != Side::Left)
    throw Error("ring-mismatch", "L(A) needs a left module over " + m.right_ring()->name());
  const auto& R = *m.right_ring();
  const auto na = a.size();
  std::size_t free_size = 1;
  for (std::size_t i = 0; i < na; ++i) {
    free_size *= R.size();
    if (free_size > kStreamedKernelCap)
      throw Error("cap-exceeded", "F|A| = R^" + std::to_string(na) + " exceeds " + std::to_string(kStreamedKernelCap));
  }
  auto digits = [&](std::size_t w) {
    std::vector<std::size_t> d(na);
    for (std::size_t i = 0; i < na; ++i) {
      d[i] = w % R.size();
      w /= R.size();
    }
    return d;
  };
  // Counit F|A| -> A: the formal combination Σ w_a·a evaluated in A.
  std::vector<std::size_t> counit(free_size);
  for (std::size_t w = 0; w < free_size; ++w) {
    const auto d = digits(w);
    std::size_t acc = a.group().zero();
    for (std::size_t i = 0; i < na; ++i) acc = a.add(acc, a.act(d[i], i));
    counit[w] = acc;
  }

  const auto& basis = m.group().basis();
  const auto km = basis.size();
  const auto gens = na * km;
  auto gen = [&](std::size_t elem, std::size_t l) { return elem * km + l; };

  std::set<IntRow> relations;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t l = 0; l < km; ++l) {
      IntRow row(gens, 0);
      row[gen(i, l)] = m.group().orders()[l];
      relations.insert(std::move(row));
    }
  const auto exponent = static_cast<std::int64_t>(m.group().exponent());
  // b·(u_a - v_a) in component a, for each basis element b of M.
  auto add_pair = [&](const std::vector<std::size_t>& u, const std::vector<std::size_t>& v) {
    for (std::size_t l = 0; l < km; ++l) {
      IntRow row(gens, 0);
      for (std::size_t i = 0; i < na; ++i) {
        const auto e = m.group().sub(m.right(basis[l], u[i]), m.right(basis[l], v[i]));
        const auto& c = m.group().coords(e);
        for (std::size_t j = 0; j < km; ++j) row[gen(i, j)] = c[j];
      }
      relations.insert(std::move(row));
    }
  };

  LeftAdjointResult result{FiniteModule::zero(m.left_ring()), 0, free_size <= kLiteralKernelCap};
  if (result.literal_kernel_pair) {
    std::vector<std::vector<std::size_t>> fibres(na);
    for (std::size_t w = 0; w < free_size; ++w) fibres[counit[w]].push_back(w);
    for (const auto& fibre : fibres)
      for (auto u : fibre) {
        const auto du = digits(u);
        for (auto v : fibre) {
          add_pair(du, digits(v));
          ++result.kernel_pairs;
        }
      }
  } else {
    const std::vector<std::size_t> zero(na, R.zero());
    for (std::size_t w = 0; w < free_size; ++w)
      if (counit[w] == a.group().zero()) {
        add_pair(digits(w), zero);
        ++result.kernel_pairs;
      }
  }

  std::vector<IntRow> rows(relations.begin(), relations.end());
  PresentedGroup pres(gens, rows, std::max<std::int64_t>(exponent, 1));
  auto group = FiniteAbelianGroup::from_orders(pres.orders());

  // S acts componentwise on |A|·M.
  const auto& S = m.left_ring();
  auto act_on_combo = [&](std::size_t s, const IntRow& combo) {
    IntRow out(gens, 0);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t l = 0; l < km; ++l) {
        const auto k = combo[gen(i, l)];
        if (k == 0) continue;
        const auto& c = m.group().coords(m.left(s, basis[l]));
        for (std::size_t j = 0; j < km; ++j) out[gen(i, j)] += k * c[j];
      }
    return out;
  };
  const IntRow zero_coords(pres.orders().size(), 0);
  for (std::size_t s = 0; s < S->size(); ++s)
    for (const auto& row : rows)
      if (pres.reduce(act_on_combo(s, row)) != zero_coords)
        throw Error("not-a-module", "S-action does not preserve the coequalizer relations");
  std::vector<std::size_t> action(S->size() * group.size());
  for (std::size_t s = 0; s < S->size(); ++s)
    for (std::size_t t = 0; t < group.size(); ++t) {
      IntRow combo(gens, 0);
      const auto& c = group.coords(t);
      for (std::size_t b = 0; b < c.size(); ++b)
        for (std::size_t g = 0; g < gens; ++g) combo[g] += c[b] * pres.representative(b)[g];
      action[s * group.size() + t] = group.element(pres.reduce(act_on_combo(s, combo)));
    }
  result.module = FiniteModule(S, Side::Left, std::move(group), std::move(action));
  return result;
}

Bimodule extension_bimodule(const RingHom& f) {
  const auto& S = *f.target;
  const auto n = S.size();
  std::vector<std::size_t> left(n * n), right(f.source->size() * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) left[s * n + t] = S.mul(s, t);
  for (std::size_t r = 0; r < f.source->size(); ++r)
    for (std::size_t t = 0; t < n; ++t) right[r * n + t] = S.mul(t, f(r));
  return Bimodule(f.target, f.source, FiniteAbelianGroup::from_table(n, S.add_table()), std::move(left), std::move(right));
}

Bimodule coextension_bimodule(const RingHom& f) {
  const auto& S = *f.target;
  const auto n = S.size();
  std::vector<std::size_t> left(f.source->size() * n), right(n * n);
  for (std::size_t r = 0; r < f.source->size(); ++r)
    for (std::size_t t = 0; t < n; ++t) left[r * n + t] = S.mul(f(r), t);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) right[s * n + t] = S.mul(t, s);
  return Bimodule(f.source, f.target, FiniteAbelianGroup::from_table(n, S.add_table()), std::move(left), std::move(right));
}

FiniteModule restriction(const RingHom& f, const FiniteModule& n) {
  if (!same_ring(n.ring(), f.target)) throw Error("ring-mismatch", "restriction needs a module over the target ring");
  return make_module(f.source, n.side(), n.group(), [&](std::size_t r, std::size_t v) { return n.act(f(r), v); });
}

ChangeOfRingsReport change_of_rings(const RingHom& f, const std::vector<FiniteModule>& r_modules,
                                    const std::vector<FiniteModule>& s_modules) {
  ChangeOfRingsReport report;
  const auto ext = extension_bimodule(f);
  const auto coext = coextension_bimodule(f);
  auto fail = [&](const std::string& what) {
    report.ok = false;
    report.lines.push_back("FAIL " + what);
  };

  for (std::size_t j = 0; j < s_modules.size(); ++j) {
    const auto res = restriction(f, s_modules[j]);
    bool factors = true;
    for (std::size_t r = 0; r < f.source->size(); ++r)
      for (std::size_t q = 0; q < f.source->size(); ++q)
        if (f(r) == f(q))
          for (std::size_t v = 0; v < res.size(); ++v) factors = factors && res.act(r, v) == res.act(q, v);
    report.lines.push_back("res(N" + std::to_string(j) + ") = " + res.group().invariant_string() +
                           (factors ? ", action factors through f" : ""));
    if (!factors) fail("restricted action of N" + std::to_string(j) + " does not factor through f");
  }

  for (std::size_t i = 0; i < r_modules.size(); ++i) {
    const auto& x = r_modules[i];
    const auto e = tensor(ext, x);
    const auto c = hom_module(coext, x);
    report.lines.push_back("ext(X" + std::to_string(i) + ") = " + e.module.group().invariant_string() + ", coext(X" +
                           std::to_string(i) + ") = " + c.module.group().invariant_string());
    for (std::size_t j = 0; j < s_modules.size(); ++j) {
      const auto& n = s_modules[j];
      const auto res = restriction(f, n);
      const auto tag = "(X" + std::to_string(i) + ", N" + std::to_string(j) + ")";

      // ext ⊣ res: g ↦ (x ↦ g(1 ⊗ x)).
      auto b1 = match(module_homs(e.module, n), module_homs(x, res), [&](const Table& g) {
        Table out(x.size());
        for (std::size_t v = 0; v < x.size(); ++v) out[v] = g[e.product.pure(f.target->one(), v)];
        return out;
      });
      ++report.bijections;
      report.lines.push_back("ext-res " + tag + ": " + std::to_string(b1.left_count) + " <-> " +
                             std::to_string(b1.right_count));
      if (!b1.ok) fail("ext-res " + tag + ": " + b1.failure);

      // res ⊣ coext: φ ↦ (n ↦ (s ↦ φ(s·n))).
      auto b2 = match(module_homs(res, x), module_homs(n, c.module), [&](const Table& phi) {
        Table out(n.size());
        for (std::size_t v = 0; v < n.size(); ++v) {
          Table col(f.target->size());
          for (std::size_t s = 0; s < col.size(); ++s) col[s] = phi[n.act(s, v)];
          out[v] = c.index_of(col);
        }
        return out;
      });
      ++report.bijections;
      report.lines.push_back("res-coext " + tag + ": " + std::to_string(b2.left_count) + " <-> " +
                             std::to_string(b2.right_count));
      if (!b2.ok) fail("res-coext " + tag + ": " + b2.failure);
    }
  }
  return report;
}

CofreeBimodule cofree_bimodule(const RingPtr& s, const RingPtr& r, const FiniteModule& n) {
  if (!same_ring(n.ring(), s) || n.side() != Side::Left) throw Error("ring-mismatch", "cofree bimodule needs a left S-module");
  auto rg = FiniteAbelianGroup::from_table(r->size(), r->add_table());
  std::vector<Table> maps;
  for_each_group_hom(rg, n.group(), [&](const Table& t) {
    maps.push_back(t);
    return true;
  });
  std::sort(maps.begin(), maps.end());
  const auto k = maps.size();
  auto index = [&](const Table& t) {
    return static_cast<std::size_t>(std::lower_bound(maps.begin(), maps.end(), t) - maps.begin());
  };
  std::vector<std::size_t> add(k * k), left(s->size() * k), right(r->size() * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Table t(r->size());
      for (std::size_t q = 0; q < r->size(); ++q) t[q] = n.add(maps[i][q], maps[j][q]);
      add[i * k + j] = index(t);
    }
    for (std::size_t a = 0; a < s->size(); ++a) {
      Table t(r->size());
      for (std::size_t q = 0; q < r->size(); ++q) t[q] = n.act(a, maps[i][q]);
      left[a * k + i] = index(t);
    }
    for (std::size_t b = 0; b < r->size(); ++b) {
      Table t(r->size());
      for (std::size_t q = 0; q < r->size(); ++q) t[q] = maps[i][r->mul(b, q)];
      right[b * k + i] = index(t);
    }
  }
  Table counit(k);
  for (std::size_t i = 0; i < k; ++i) counit[i] = maps[i][r->one()];
  Bimodule bimodule(s, r, FiniteAbelianGroup::from_table(k, add), std::move(left), std::move(right));
  return {std::move(maps), std::move(bimodule), std::move(counit)};
}

BijectionCheck check_cofree_couniversal(const CofreeBimodule& c, const FiniteModule& n, const Bimodule& m) {
  return match(bimodule_homs(m, c.bimodule), module_homs(m.left_module(), n),
               [&](const Table& h) { return after(c.counit, h); });
}

BijectionCheck check_free_universal(const FreeBimodule& f, const FiniteModule& m, const Bimodule& p) {
  return match(bimodule_homs(f.bimodule, p), module_homs(m, p.left_module()),
               [&](const Table& h) { return after(h, f.unit); });
}

}  // namespace coalg
