#include "coalg/cli/commands.hpp"

#include <set>

#include "coalg/backends/registry.hpp"
#include "coalg/bimodule/as_coalgebra.hpp"
#include "coalg/bimodule/eilenberg_watts.hpp"
#include "coalg/bimodule/tensor.hpp"
#include "coalg/coalgebra/canonical.hpp"
#include "coalg/error.hpp"
#include "coalg/hopf/matrix_comonoid.hpp"
#include "coalg/theory/presentation.hpp"

namespace coalg {

namespace {

std::string tuple_string(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

Json element_list(const CarrierObject& obj, const std::vector<Element>& elems) {
  Json out = Json::array();
  for (const auto& e : elems) out.push_back(obj.show(e));
  return out;
}

Json coop_table(const Coalgebra& c) {
  Json out = Json::object();
  const auto& carrier = *c.carrier();
  std::vector<Element> points;
  if (carrier.is_free()) {
    for (std::size_t i = 0; i < carrier.rank(); ++i) points.push_back(carrier.generator(i));
  } else {
    points = carrier.elements();
  }
  for (const auto& decl : c.cotheory().signature.ops()) {
    const auto& h = c.coop(decl.name);
    Json row = Json::object();
    for (const auto& p : points) row[carrier.show(p)] = h.codomain()->show(h(p));
    out[decl.name] = row;
  }
  return out;
}

void add_coalgebra_checks(Report& r, const Coalgebra& c) {
  const auto rep = verify_coalgebra(c);
  for (const auto& eq : rep.equations) {
    Json extra = {{"equation", eq.equation}};
    if (!eq.ok) {
      extra["witness"] = eq.witness;
      extra["lhs"] = eq.lhs;
      extra["rhs"] = eq.rhs;
      r.witness({{"equation", eq.equation}, {"at", eq.witness}, {"lhs", eq.lhs}, {"rhs", eq.rhs}});
    }
    r.add("dual axiom " + std::to_string(eq.index + 1), verdict_of(eq.ok), std::move(extra));
  }
  if (rep.equations.empty()) r.add("dual axioms", Verdict::Ok, {{"equations", 0}});
}

void check_algebra(Report& r, const Workspace& ws, const WorkspaceAlgebra& a) {
  const auto th = ws.theory(a.theory);
  for (std::size_t i = 0; i < th.equations.size(); ++i) {
    const auto& eq = th.equations[i];
    const auto res = satisfies(a.algebra, eq);
    const auto text = to_string(eq.lhs) + " = " + to_string(eq.rhs);
    Json extra = {{"equation", text}};
    if (!res.holds) {
      extra["witness"] = tuple_string(res.witness);
      r.witness({{"equation", text}, {"at", tuple_string(res.witness)}});
    }
    r.add("equation " + std::to_string(i + 1), verdict_of(res.holds), std::move(extra));
  }
  if (th.equations.empty()) r.add("equations", Verdict::Ok, {{"count", 0}});
}

void check_morphism(Report& r, const TheoryMorphism& phi) {
  const auto v = validate_theory_morphism(phi);
  Json extra = {{"source", phi.source.name}, {"target", phi.target_backend ? phi.target_backend->name() : phi.target.name},
                {"equations", phi.source.equations.size()}};
  if (!v.valid && v.failing_equation) {
    const auto& eq = phi.source.equations[*v.failing_equation];
    const auto text = to_string(eq.lhs) + " = " + to_string(eq.rhs);
    extra["failing_equation"] = text;
    extra["lhs"] = v.lhs_nf;
    extra["rhs"] = v.rhs_nf;
    r.witness({{"equation", text}, {"lhs", v.lhs_nf}, {"rhs", v.rhs_nf}});
  }
  r.add("preserves equations", verdict_of(v.valid), std::move(extra));
}

Json names_of(const FiniteBialgebra& h, const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(h.algebra().name(x));
  return out;
}

}  // namespace

Report cmd_check(const Workspace& ws, const std::string& target) {
  Report r;
  r.command = "check";
  r.inputs = {{"target", target}};
  const auto kinds = ws.kinds_of(target);
  if (kinds.size() > 1) throw Error("ambiguous-name", "'" + target + "' names several objects");
  const std::string kind = kinds.empty() ? "" : kinds.front();
  r.inputs["kind"] = kind.empty() ? "builtin" : kind;
  if (kind == "coalgebra") {
    const auto& c = ws.coalgebras.at(target);
    r.add("structure", Verdict::Ok,
          {{"cotheory", c.cotheory().name}, {"variety", c.backend().name()}, {"carrier", c.carrier()->describe()}});
    add_coalgebra_checks(r, c);
  } else if (kind == "morphism") {
    check_morphism(r, ws.morphisms.at(target));
  } else if (kind == "algebra") {
    check_algebra(r, ws, ws.algebras.at(target));
  } else if (kind == "theory") {
    const auto& th = ws.theories.at(target);
    r.add("presentation", Verdict::Ok, {{"operations", th.signature.size()}, {"equations", th.equations.size()}});
  } else if (kind == "ring") {
    const auto& R = ws.rings.at(target);
    r.add("ring axioms", Verdict::Ok, {{"size", R->size()}, {"commutative", R->is_commutative()}});
  } else if (kind == "module") {
    const auto& m = ws.modules.at(target);
    r.add("module axioms", Verdict::Ok, {{"ring", m.ring()->name()}, {"group", m.group().invariant_string()}});
  } else if (kind == "bimodule") {
    const auto& m = ws.bimodules.at(target);
    r.add("bimodule axioms", Verdict::Ok,
          {{"left", m.left_ring()->name()}, {"right", m.right_ring()->name()}, {"group", m.group().invariant_string()}});
  } else {
    std::optional<FiniteBialgebra> h;
    try {
      h = ws.bialgebra(target);
    } catch (const Error&) {
    }
    if (h) {
      r.inputs["kind"] = "bialgebra";
      for (const auto& law : h->laws()) {
        r.add(law.law, verdict_of(law.ok));
        if (!law.ok) r.witness({{"law", law.law}, {"at", law.witness}});
      }
    } else {
      const auto th = ws.theory(target);
      r.add("presentation", Verdict::Ok, {{"operations", th.signature.size()}, {"equations", th.equations.size()}});
    }
  }
  return r;
}

Report cmd_gphi(const Workspace& ws, const std::string& phi_name, const std::string& target,
                std::optional<std::size_t> bound) {
  Report r;
  r.command = "gphi";
  r.inputs = {{"phi", phi_name}, {"coalgebra", target}};
  if (bound) r.inputs["bound"] = *bound;

  if (phi_name == "group-like" || phi_name == "primitive") {
    const auto h = ws.bialgebra(target);
    const auto enc = encode_bialgebra(h);
    const bool gl = phi_name == "group-like";
    const auto& phi = gl ? enc.psi : enc.phi;
    const auto& c = gl ? enc.multiplicative : enc.additive;
    const auto g = g_phi(phi, c);
    std::vector<std::size_t> abstract;
    for (const auto& e : g.members) abstract.push_back(e.as_index());
    const auto classical = gl ? group_like(h) : primitive(h);
    r.add("G", Verdict::Ok, {{"cotheory", c.cotheory().name}, {"members", names_of(h, abstract)}, {"examined", g.examined}});
    r.add("matches classical formula", verdict_of(abstract == classical), {{"classical", names_of(h, classical)}});
    const auto closure = check_closure(h);
    const bool closed = gl ? closure.submonoid : closure.submodule;
    r.add(gl ? "submonoid" : "submodule", verdict_of(closed));
    if (!closed) r.witness({{"closure", closure.witness}});
    return r;
  }
  if (phi_name == "invariants") {
    const auto it = ws.bimodules.find(target);
    if (it == ws.bimodules.end()) throw Error("unknown-name", "no bimodule named '" + target + "'");
    const auto& m = it->second;
    if (!(*m.left_ring() == *m.right_ring()))
      throw Error("ring-mismatch", "invariants need an (R, R)-bimodule");
    const auto c = bimodule_coalgebra(m, target);
    const auto g = g_phi(module_identity(m.right_ring()), c);
    Json members = Json::array();
    for (const auto& e : g.members) members.push_back(e.as_index());
    r.add("G", Verdict::Ok, {{"members", members}, {"examined", g.examined}});
    if (c.backend().is_commutative())
      r.add("subalgebra", verdict_of(g.closed), {{"size", g.members.size()}});
    else
      r.add("subalgebra", Verdict::Ok, {{"closed", g.closed}, {"variety", c.backend().name()}, {"commutative", false}});
    return r;
  }

  const auto& phi = ws.morphisms.count(phi_name) ? ws.morphisms.at(phi_name)
                                                 : throw Error("unknown-name", "no morphism named '" + phi_name + "'");
  const auto it = ws.coalgebras.find(target);
  if (it == ws.coalgebras.end()) throw Error("unknown-name", "no coalgebra named '" + target + "'");
  const auto& c = it->second;
  const auto g = g_phi(phi, c, bound);
  const auto& carrier = *c.carrier();
  Json extra = {{"members", element_list(carrier, g.members)}, {"examined", g.examined}};
  if (g.bounded) {
    extra["bound"] = *bound;
    r.add("G", Verdict::Bounded, std::move(extra));
    const std::set<Element> members(g.members.begin(), g.members.end());
    bool contains = true;
    for (std::size_t i = 0; i < carrier.rank(); ++i) contains = contains && members.count(carrier.generator(i));
    r.add("generators in G", contains ? Verdict::Bounded : Verdict::Fail);
    r.add("G generates", g.generates ? Verdict::Bounded : Verdict::Fail);
  } else {
    r.add("G", Verdict::Ok, std::move(extra));
    if (g.subalgebra)
      r.add("subalgebra", Verdict::Ok, {{"size", g.subalgebra->size()}});
    else if (c.backend().is_commutative())
      r.add("subalgebra", Verdict::Fail, {{"closed", g.closed}});
  }
  return r;
}

Report cmd_vphi(const Workspace& ws, const std::string& phi_name, const std::vector<std::string>& generators,
                std::optional<std::size_t> bound) {
  Report r;
  r.command = "vphi";
  r.inputs = {{"phi", phi_name}, {"generators", generators}};
  if (bound) r.inputs["bound"] = *bound;
  const auto it = ws.morphisms.find(phi_name);
  if (it == ws.morphisms.end()) throw Error("unknown-name", "no morphism named '" + phi_name + "'");
  const auto v = v_phi(it->second, generators);
  r.add("co-operations", Verdict::Ok, {{"values", coop_table(v)}});
  add_coalgebra_checks(r, v);
  if (bound) {
    const auto g = g_phi(it->second, v, bound);
    const std::set<Element> members(g.members.begin(), g.members.end());
    bool contains = true;
    for (std::size_t i = 0; i < v.carrier()->rank(); ++i) contains = contains && members.count(v.carrier()->generator(i));
    r.add("G", Verdict::Bounded,
          {{"members", element_list(*v.carrier(), g.members)}, {"examined", g.examined}, {"bound", *bound}});
    r.add("generators in G", contains ? Verdict::Bounded : Verdict::Fail);
    r.add("G generates", g.generates ? Verdict::Bounded : Verdict::Fail);
  }
  return r;
}

Report cmd_nphi(const Workspace& ws, const std::string& phi_name, const std::string& algebra) {
  Report r;
  r.command = "nphi";
  r.inputs = {{"phi", phi_name}, {"algebra", algebra}};
  const auto it = ws.morphisms.find(phi_name);
  if (it == ws.morphisms.end()) throw Error("unknown-name", "no morphism named '" + phi_name + "'");
  const auto a = ws.algebra_object(algebra);
  const auto n = n_phi(it->second, a);
  r.add("co-operations", Verdict::Ok, {{"values", coop_table(n)}});
  add_coalgebra_checks(r, n);
  const auto g = g_phi(it->second, n);
  const bool whole = g.members.size() == a->size() && g.subalgebra && *g.subalgebra == a->algebra();
  r.add("G(N(A)) = A", verdict_of(whole), {{"members", g.members.size()}, {"carrier", a->size()}});
  return r;
}

Report cmd_ew(const Workspace& ws, const std::string& bimodule, const std::vector<std::string>& modules) {
  Report r;
  r.command = "ew";
  r.inputs = {{"bimodule", bimodule}, {"modules", modules}};
  const auto it = ws.bimodules.find(bimodule);
  if (it == ws.bimodules.end()) throw Error("unknown-name", "no bimodule named '" + bimodule + "'");
  const auto& m = it->second;
  std::vector<FiniteModule> xs, ys;
  for (const auto& name : modules) {
    const auto mit = ws.modules.find(name);
    if (mit == ws.modules.end()) throw Error("unknown-name", "no module named '" + name + "'");
    const auto& x = mit->second;
    if (x.side() != Side::Left) throw Error("side-mismatch", name + " is not a left module");
    const bool over_r = *x.ring() == *m.right_ring();
    const bool over_s = *x.ring() == *m.left_ring();
    if (!over_r && !over_s)
      throw Error("ring-mismatch", name + " is a module over " + x.ring()->name() + ", the bimodule is over (" +
                                       m.left_ring()->name() + ", " + m.right_ring()->name() + ")");
    if (over_r) xs.push_back(x);
    if (over_s) ys.push_back(x);
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto t = tensor(m, xs[i]);
    const auto l = left_adjoint_via_presentation(m, xs[i]);
    const bool iso = module_isomorphism(l.module, t.module).has_value();
    r.add("presentation oracle X" + std::to_string(i + 1), verdict_of(iso),
          {{"tensor", t.module.group().invariant_string()},
           {"left_adjoint", l.module.group().invariant_string()},
           {"kernel_pairs", l.kernel_pairs}});
  }
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const auto h = hom_module(m, ys[j]);
    r.add("hom module Y" + std::to_string(j + 1), Verdict::Ok, {{"group", h.module.group().invariant_string()}});
  }
  std::size_t squares = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const auto a = check_tensor_hom_adjunction(m, xs[i], ys[j], xs, ys);
      squares += a.naturality_squares;
      Json extra = {{"homs", a.bijection.left_count}, {"naturality_squares", a.naturality_squares}};
      if (!a.ok()) {
        extra["failure"] = a.bijection.failure + a.failure;
        r.witness({{"X", i + 1}, {"Y", j + 1}, {"failure", a.bijection.failure + a.failure}});
      }
      r.add("adjunction X" + std::to_string(i + 1) + " Y" + std::to_string(j + 1), verdict_of(a.ok()),
            std::move(extra));
    }
  r.inputs["squares"] = squares;
  return r;
}

Report cmd_hopf(const Workspace& ws, const std::string& name) {
  Report r;
  r.command = "hopf";
  r.inputs = {{"target", name}};
  if (name.size() == 2 && name[0] == 'M' && name[1] >= '1' && name[1] <= '9' && !ws.bialgebras.count(name)) {
    const auto mc = matrix_comonoid(static_cast<std::size_t>(name[1] - '0'));
    for (const auto& eq : mc.report.equations)
      r.add("dual axiom " + std::to_string(eq.index + 1), verdict_of(eq.ok), {{"equation", eq.equation}});
    r.add("co-operations", Verdict::Ok, {{"values", coop_table(mc.comonoid)}});
    if (mc.n <= 2) {
      const auto check = check_induced_monoid(mc, builtin_ring("Z2"));
      r.add("induced monoid is matrix multiplication over Z2", verdict_of(check.ok()),
            {{"pairs", check.pairs}, {"agreeing", check.agreeing}, {"unit", check.unit_ok}});
    }
    return r;
  }
  const auto h = ws.bialgebra(name);
  r.inputs["ring"] = h.ring()->name();
  r.inputs["size"] = h.size();
  for (const auto& law : h.laws()) r.add(law.law, verdict_of(law.ok));
  const auto gl = group_like(h);
  const auto pr = primitive(h);
  const auto closure = check_closure(h);
  r.add("group-likes", Verdict::Ok, {{"members", names_of(h, gl)}});
  r.add("primitives", Verdict::Ok, {{"members", names_of(h, pr)}});
  r.add("group-likes form a submonoid", verdict_of(closure.submonoid));
  r.add("primitives form a submodule", verdict_of(closure.submodule));
  if (!closure.witness.empty()) r.witness(closure.witness);
  try {
    const auto cmp = gphi_matches_classical(h);
    r.add("G for the comonoid structure equals group-likes", verdict_of(cmp.group_like_abstract == cmp.group_like_classical),
          {{"abstract", names_of(h, cmp.group_like_abstract)}});
    r.add("G for the additive structure equals primitives", verdict_of(cmp.primitive_abstract == cmp.primitive_classical),
          {{"abstract", names_of(h, cmp.primitive_abstract)}});
  } catch (const Error& e) {
    if (e.kind() != "cap-exceeded") throw;
    r.add("abstract comparison", Verdict::Ok, {{"skipped", e.what()}});
  }
  return r;
}

}  // namespace coalg
