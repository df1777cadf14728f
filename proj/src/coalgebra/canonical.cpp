#include "coalg/coalgebra/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "coalg/backends/registry.hpp"
#include "coalg/error.hpp"

namespace coalg {

namespace {

const BackendPtr& target_of(const TheoryMorphism& phi) {
  if (!phi.target_backend) throw Error("no-backend", "morphism " + phi.name + " has no target variety");
  return phi.target_backend;
}

void check_carrier_variety(const TheoryMorphism& phi, const CarrierObject& obj) {
  if (obj.backend().name() != target_of(phi)->name())
    throw Error("backend-mismatch", "carrier lives in " + obj.backend().name() + ", morphism targets " +
                                        phi.target_backend->name());
}

// Φ(σ) evaluated in n·A at (ν_1 a, .., ν_n a).
Element diagonal_then_operate(const TheoryMorphism& phi, const Coproduct& cp, const std::string& op, const Element& a) {
  std::vector<Element> env;
  env.reserve(cp.arity());
  for (std::size_t k = 0; k < cp.arity(); ++k) env.push_back(cp.injection(k)(a));
  return evaluate(*cp.object(), phi.image(op), env);
}

std::vector<Element> points_of(const CarrierObject& obj) {
  if (!obj.is_free()) return obj.elements();
  std::vector<Element> gens;
  for (std::size_t i = 0; i < obj.rank(); ++i) gens.push_back(obj.generator(i));
  return gens;
}

Coalgebra canonical(const TheoryMorphism& phi, const ObjectPtr& carrier, std::string name) {
  std::map<std::string, Hom> coops;
  for (const auto& decl : phi.source.signature.ops()) {
    const auto cp = copower(carrier, decl.arity);
    std::vector<Element> images;
    for (const auto& a : points_of(*carrier)) images.push_back(diagonal_then_operate(phi, cp, decl.name, a));
    coops.emplace(decl.name, Hom(carrier, cp.object(), std::move(images)));
  }
  return Coalgebra(std::move(name), phi.source, carrier, std::move(coops));
}

void collect_vars(const Term& t, std::set<std::size_t>& out) {
  if (t.is_var()) {
    out.insert(t.var);
    return;
  }
  for (const auto& a : t.args) collect_vars(a, out);
}

}  // namespace

Coalgebra v_phi(const TheoryMorphism& phi, const std::vector<std::string>& generators, std::string name) {
  auto carrier = CarrierObject::free_on(target_of(phi), generators);
  if (name.empty()) name = "V_" + phi.name;
  return canonical(phi, carrier, std::move(name));
}

Coalgebra n_phi(const TheoryMorphism& phi, const ObjectPtr& a, std::string name) {
  check_carrier_variety(phi, *a);
  if (!target_of(phi)->is_commutative())
    throw Error("non-commutative", "variety " + phi.target_backend->name() + " is not commutative");
  if (name.empty()) name = "N_" + phi.name;
  return canonical(phi, a, std::move(name));
}

FreeEnumeration enumerate_free(const CarrierObject& obj, std::size_t max_nodes, std::size_t cap) {
  if (!obj.is_free()) throw Error("not-free", "enumeration applies to free carriers");
  const auto& sig = obj.backend().signature();
  FreeEnumeration out;
  std::map<Element, std::size_t> seen;
  std::vector<std::vector<std::size_t>> levels(max_nodes + 1);
  auto learn = [&](Element e, Term t, std::size_t level) {
    if (seen.count(e)) return;
    if (out.elements.size() >= cap) throw Error("cap-exceeded", "more than " + std::to_string(cap) + " free elements");
    seen.emplace(e, out.elements.size());
    levels[level].push_back(out.elements.size());
    out.elements.push_back(std::move(e));
    out.derivations.push_back(std::move(t));
  };
  if (max_nodes == 0) return out;
  for (std::size_t i = 0; i < obj.rank(); ++i) learn(obj.generator(i), Term::variable(i + 1), 1);
  for (std::size_t op = 0; op < sig.size(); ++op)
    if (sig.op(op).arity == 0) learn(obj.apply(op, {}), Term::apply(sig.op(op).name), 1);

  for (std::size_t k = 2; k <= max_nodes; ++k) {
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const auto arity = sig.op(op).arity;
      if (arity == 0 || arity > k - 1) continue;
      // Split k-1 nodes among the arguments, then pick one element per level.
      std::vector<std::size_t> sizes(arity);
      std::function<void(std::size_t, std::size_t)> split = [&](std::size_t pos, std::size_t left) {
        if (pos + 1 == arity) {
          sizes[pos] = left;
          std::vector<std::size_t> pick(arity, 0);
          for (std::size_t p = 0; p < arity; ++p)
            if (levels[sizes[p]].empty()) return;
          std::vector<Element> args(arity);
          while (true) {
            std::vector<Term> sub;
            for (std::size_t p = 0; p < arity; ++p) {
              const auto idx = levels[sizes[p]][pick[p]];
              args[p] = out.elements[idx];
              sub.push_back(out.derivations[idx]);
            }
            learn(obj.apply(op, args), Term::apply(sig.op(op).name, std::move(sub)), k);
            std::size_t p = arity;
            while (p > 0 && ++pick[p - 1] == levels[sizes[p - 1]].size()) pick[--p] = 0;
            if (p == 0) break;
          }
          return;
        }
        for (std::size_t s = 1; s + (arity - pos - 1) <= left; ++s) {
          sizes[pos] = s;
          split(pos + 1, left - s);
        }
      };
      split(0, k - 1);
    }
  }
  return out;
}

bool in_g_phi(const TheoryMorphism& phi, const Coalgebra& c, const Element& a) {
  for (const auto& decl : phi.source.signature.ops()) {
    const auto& cp = c.copower(decl.arity);
    if (!(c.coop(decl.name)(a) == diagonal_then_operate(phi, cp, decl.name, a))) return false;
  }
  return true;
}

GPhiResult g_phi(const TheoryMorphism& phi, const Coalgebra& c, std::optional<std::size_t> bound) {
  check_carrier_variety(phi, *c.carrier());
  if (phi.source.signature != c.cotheory().signature)
    throw Error("cotheory-mismatch", "morphism source differs from the coalgebra's cotheory");
  GPhiResult result;
  const auto& carrier = *c.carrier();
  if (!carrier.is_free()) {
    std::set<std::size_t> subset;
    for (const auto& a : carrier.elements()) {
      ++result.examined;
      if (in_g_phi(phi, c, a)) {
        result.members.push_back(a);
        subset.insert(a.as_index());
      }
    }
    result.closed = subalgebra_generated(carrier.algebra(), subset) == subset;
    if (result.closed && !(subset.empty() && carrier.size() > 0 && [&] {
          for (const auto& op : carrier.algebra().signature().ops())
            if (op.arity == 0) return true;
          return false;
        }()))
      result.subalgebra = restrict_to(carrier.algebra(), subset);
    return result;
  }
  if (!bound) throw Error("bound-required", "G of a free carrier needs an enumeration bound");
  result.bounded = true;
  const auto en = enumerate_free(carrier, *bound);
  std::set<Element> members;
  for (const auto& e : en.elements) {
    ++result.examined;
    if (in_g_phi(phi, c, e)) {
      result.members.push_back(e);
      members.insert(e);
    }
  }
  result.generates = true;
  for (const auto& t : en.derivations) {
    std::set<std::size_t> vars;
    collect_vars(t, vars);
    for (auto v : vars)
      if (!members.count(carrier.generator(v - 1))) result.generates = false;
  }
  return result;
}

std::vector<Hom> coalgebra_homs(const Coalgebra& a, const Coalgebra& b) {
  if (a.carrier()->is_free() || b.carrier()->is_free()) throw Error("not-finite", "hom enumeration needs finite carriers");
  std::vector<Hom> out;
  for_each_hom(a.carrier()->algebra(), b.carrier()->algebra(), [&](std::span<const std::size_t> t) {
    std::vector<Element> imgs;
    for (auto v : t) imgs.push_back(Element::index(v));
    Hom h(a.carrier(), b.carrier(), std::move(imgs));
    if (is_coalgebra_morphism(a, b, h)) out.push_back(std::move(h));
    return true;
  });
  return out;
}

CoreflectionReport check_coreflection(const TheoryMorphism& phi, const ObjectPtr& a, const Coalgebra& b) {
  if (a->is_free() || b.carrier()->is_free()) throw Error("not-finite", "coreflection check needs finite carriers");
  CoreflectionReport report;
  const auto n = n_phi(phi, a);
  const auto left = coalgebra_homs(n, b);
  const auto g = g_phi(phi, b);
  if (!g.subalgebra) {
    report.ok = false;
    report.failure = "G is not a subalgebra";
    return report;
  }
  std::vector<std::size_t> position(b.carrier()->size(), SIZE_MAX);
  for (std::size_t i = 0; i < g.members.size(); ++i) position[g.members[i].as_index()] = i;
  const auto right = enumerate_homs(a->algebra(), *g.subalgebra);
  report.coalgebra_homs = left.size();
  report.algebra_homs = right.size();
  std::vector<bool> hit(right.size(), false);
  for (const auto& f : left) {
    FiniteHom restricted;
    std::vector<std::size_t> full;
    for (const auto& e : f.images()) {
      full.push_back(e.as_index());
      const auto p = position[e.as_index()];
      if (p == SIZE_MAX) {
        report.ok = false;
        report.failure = "a coalgebra morphism leaves G";
        return report;
      }
      restricted.table.push_back(p);
    }
    auto it = std::lower_bound(right.begin(), right.end(), restricted);
    if (it == right.end() || !(*it == restricted)) {
      report.ok = false;
      report.failure = "restriction is not a homomorphism into G";
      return report;
    }
    const auto j = static_cast<std::size_t>(it - right.begin());
    if (hit[j]) {
      report.ok = false;
      report.failure = "restriction is not injective";
      return report;
    }
    hit[j] = true;
    report.bijection.emplace_back(std::move(full), restricted.table);
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    report.ok = false;
    report.failure = "restriction is not surjective";
  }
  // Conversely every hom into G is a coalgebra morphism out of N_Φ A.
  for (const auto& h : right) {
    std::vector<Element> imgs;
    for (auto v : h.table) imgs.push_back(g.members[v]);
    if (!is_coalgebra_morphism(n, b, Hom(a, b.carrier(), std::move(imgs)))) {
      report.ok = false;
      report.failure = "a hom into G is not a coalgebra morphism";
      break;
    }
  }
  return report;
}

CogroupProduct product_of_cogroups(const Coalgebra& a, const Coalgebra& b) {
  const auto grp = group_backend();
  const auto id = identity_morphism(grp);
  for (const auto* c : {&a, &b}) {
    if (!c->carrier()->is_free() || c->backend().name() != grp->name() ||
        c->cotheory().signature != grp->signature())
      throw Error("non-canonical", c->name() + " is not a cogroup on a free group");
    const auto canon = v_phi(id, c->carrier()->generator_names());
    for (const auto& decl : grp->signature().ops())
      if (!hom_equal(c->coop(decl.name), canon.coop(decl.name)).equal)
        throw Error("non-canonical", c->name() + " differs from V(X) at '" + decl.name + "'");
  }
  const auto& xa = a.carrier()->generator_names();
  const auto& xb = b.carrier()->generator_names();
  auto clash = [&](const std::string& n, const std::vector<std::string>& other) {
    return std::find(other.begin(), other.end(), n) != other.end();
  };
  std::vector<std::string> names;
  for (const auto& x : xa)
    for (const auto& z : xb) names.push_back("<" + x + "," + z + ">");
  for (const auto& x : xa) names.push_back(clash(x, xb) ? x + "_1" : x);
  for (const auto& z : xb) names.push_back(clash(z, xa) ? z + "_2" : z);
  auto product = v_phi(id, names, a.name() + "x" + b.name());

  const auto ea = a.carrier()->apply("e", {});
  const auto eb = b.carrier()->apply("e", {});
  std::vector<Element> first, second;
  for (std::size_t i = 0; i < xa.size(); ++i)
    for (std::size_t j = 0; j < xb.size(); ++j) {
      first.push_back(a.carrier()->generator(i));
      second.push_back(b.carrier()->generator(j));
    }
  for (std::size_t i = 0; i < xa.size(); ++i) {
    first.push_back(a.carrier()->generator(i));
    second.push_back(eb);
  }
  for (std::size_t j = 0; j < xb.size(); ++j) {
    first.push_back(ea);
    second.push_back(b.carrier()->generator(j));
  }
  Hom p1(product.carrier(), a.carrier(), std::move(first));
  Hom p2(product.carrier(), b.carrier(), std::move(second));
  return {std::move(product), std::move(p1), std::move(p2)};
}

}  // namespace coalg
