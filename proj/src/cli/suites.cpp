#include "coalg/cli/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "coalg/algebra/model_search.hpp"
#include "coalg/backends/registry.hpp"
#include "coalg/bimodule/eilenberg_watts.hpp"
#include "coalg/bimodule/enumerate.hpp"
#include "coalg/bimodule/tensor.hpp"
#include "coalg/cli/commands.hpp"
#include "coalg/coalgebra/canonical.hpp"
#include "coalg/error.hpp"
#include "coalg/hopf/bialgebra.hpp"
#include "coalg/hopf/matrix_comonoid.hpp"

namespace coalg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

CriterionResult started(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('x' + i)));
  return out;
}

std::string set_string(const FiniteBialgebra& h, const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + h.algebra().name(xs[i]);
  return s + "}";
}

bool same_names(const FiniteBialgebra& h, const std::vector<std::size_t>& xs, std::set<std::string> want) {
  std::set<std::string> got;
  for (auto x : xs) got.insert(h.algebra().name(x));
  return got == want;
}

std::vector<RingPtr> small_rings() {
  return {builtin_ring("Z2"), builtin_ring("Z3"), builtin_ring("Z4"), builtin_ring("F2eps")};
}

std::vector<ObjectPtr> small_objects(const BackendPtr& b, std::size_t max_size) {
  std::vector<ObjectPtr> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (auto& a : find_models(b->presentation(), n)) out.push_back(CarrierObject::finite(b, std::move(a)));
  return out;
}

/// Every coalgebra structure on B for the given cotheory.
std::vector<Coalgebra> all_structures(const TheoryPresentation& cot, const ObjectPtr& b) {
  std::vector<std::pair<std::string, std::vector<Hom>>> options;
  for (const auto& d : cot.signature.ops()) {
    const auto cp = copower(b, d.arity);
    std::vector<Hom> homs;
    for (const auto& h : enumerate_homs(b->algebra(), cp.object()->algebra())) {
      std::vector<Element> images;
      for (auto v : h.table) images.push_back(Element::index(v));
      homs.emplace_back(b, cp.object(), std::move(images));
    }
    options.emplace_back(d.name, std::move(homs));
  }
  std::vector<Coalgebra> out;
  std::map<std::string, Hom> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == options.size()) {
      Coalgebra c("B", cot, b, current);
      if (verify_coalgebra(c).ok) out.push_back(std::move(c));
      return;
    }
    for (const auto& h : options[i].second) {
      current.insert_or_assign(options[i].first, h);
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

CriterionResult criterion_cogroups() {
  auto r = started(1, "cogroup axioms for V(X) in Grp, |X| = 1..3");
  const auto t0 = Clock::now();
  const auto id = identity_morphism(group_backend());
  bool ok = true;
  std::size_t axioms = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto rep = verify_coalgebra(v_phi(id, letters(n)));
    ok = ok && rep.ok;
    axioms += rep.equations.size();
  }
  r.seconds = seconds_since(t0);
  r.ok = ok && r.seconds < 1.0;
  r.summary = std::to_string(axioms) + " axiom instances";
  return r;
}

CriterionResult criterion_classical() {
  auto r = started(2, "abstract G equals classical group-likes and primitives");
  const auto t0 = Clock::now();
  bool ok = true;
  std::string summary;
  for (const std::string name : {"F2C2", "Z3C2", "F2x2"}) {
    const auto h = stored_bialgebra(name);
    const auto cmp = gphi_matches_classical(h);
    ok = ok && cmp.ok();
    summary += name + " GL=" + set_string(h, cmp.group_like_abstract) + " P=" + set_string(h, cmp.primitive_abstract) + "; ";
    if (name == "F2C2") ok = ok && same_names(h, cmp.group_like_abstract, {"1", "x"});
    if (name == "F2x2") ok = ok && same_names(h, cmp.primitive_abstract, {"0", "x"});
  }
  r.seconds = seconds_since(t0);
  r.ok = ok && r.seconds < 5.0;
  r.summary = summary;
  return r;
}

CriterionResult criterion_presentation_oracle() {
  auto r = started(3, "left adjoint via presentation is isomorphic to the tensor");
  const auto t0 = Clock::now();
  std::size_t cases = 0, good = 0;
  for (const auto& ring : small_rings()) {
    const auto modules = modules_up_to_iso(ring, 8);
    for (const auto& m : bimodules_up_to_iso(ring, ring, 4))
      for (const auto& a : modules) {
        const auto l = left_adjoint_via_presentation(m, a);
        const auto t = tensor(m, a);
        ++cases;
        if (module_isomorphism(l.module, t.module)) ++good;
      }
  }
  r.seconds = seconds_since(t0);
  r.ok = good == cases && r.seconds < 60.0;
  r.summary = std::to_string(good) + "/" + std::to_string(cases) + " isomorphisms";
  return r;
}

CriterionResult criterion_adjunction() {
  auto r = started(4, "tensor-hom adjunction and naturality");
  const auto t0 = Clock::now();
  std::size_t cases = 0, good = 0, squares = 0;
  for (const auto& ring : small_rings()) {
    const auto modules = modules_up_to_iso(ring, 4);
    for (const auto& m : bimodules_up_to_iso(ring, ring, 4))
      for (const auto& x : modules)
        for (const auto& y : modules) {
          const auto a = check_tensor_hom_adjunction(m, x, y, modules, modules);
          ++cases;
          good += a.ok();
          squares += a.naturality_squares;
        }
  }
  r.seconds = seconds_since(t0);
  r.ok = good == cases && r.seconds < 60.0;
  r.summary = std::to_string(good) + "/" + std::to_string(cases) + " bijections, " + std::to_string(squares) +
              " naturality squares";
  return r;
}

CriterionResult criterion_coreflection() {
  auto r = started(5, "coreflection bijection for Ab and cMon, carriers <= 4");
  const auto t0 = Clock::now();
  std::size_t cases = 0, good = 0;
  std::string summary;
  for (const auto& b : {abelian_group_backend(), comm_monoid_backend()}) {
    const auto phi = identity_morphism(b);
    const auto objects = small_objects(b, 4);
    std::size_t before = cases;
    for (const auto& target : objects)
      for (const auto& c : all_structures(b->presentation(), target))
        for (const auto& a : objects) {
          const auto rep = check_coreflection(phi, a, c);
          ++cases;
          if (rep.ok && rep.coalgebra_homs == rep.algebra_homs) ++good;
        }
    summary += b->name() + " " + std::to_string(cases - before) + " pairs; ";
  }
  r.seconds = seconds_since(t0);
  r.ok = good == cases;
  r.summary = summary + std::to_string(good) + "/" + std::to_string(cases) + " bijections";
  return r;
}

CriterionResult criterion_canonical() {
  auto r = started(6, "X in G(V(X)), G(V(X)) generates, G(N(A)) = A, bound 6");
  const auto t0 = Clock::now();
  const std::size_t bound = 6;
  const RingResolver z2 = [](const std::string&) { return builtin_ring("Z2"); };
  bool ok = true;
  std::size_t runs = 0, finite = 0;
  std::string failures;
  for (const auto& name : registry_names()) {
    const auto b = backend_by_name(name, z2);
    const auto phi = identity_morphism(b);
    for (std::size_t n = 0; n <= 2; ++n) {
      const auto v = v_phi(phi, letters(n));
      const auto g = g_phi(phi, v, bound);
      const std::set<Element> members(g.members.begin(), g.members.end());
      bool contains = true;
      for (std::size_t i = 0; i < n; ++i) contains = contains && members.count(v.carrier()->generator(i));
      bool counit = true;
      if (b->is_commutative()) {
        const auto gn = g_phi(phi, n_phi(phi, v.carrier()), bound);
        counit = gn.members.size() == gn.examined;
      }
      const bool pass = verify_coalgebra(v).ok && g.bounded && contains && g.generates && counit;
      if (!pass) failures += " " + b->name() + "/" + std::to_string(n);
      ok = ok && pass;
      ++runs;
    }
    if (!b->is_commutative()) continue;
    for (std::size_t size = 1; size <= 3; ++size)
      for (auto& alg : find_models(b->presentation(), size)) {
        const auto a = CarrierObject::finite(b, std::move(alg));
        const auto g = g_phi(phi, n_phi(phi, a));
        const bool pass = g.subalgebra && *g.subalgebra == a->algebra();
        if (!pass) failures += " " + b->name() + "/finite" + std::to_string(size);
        ok = ok && pass;
        ++finite;
      }
  }
  r.seconds = seconds_since(t0);
  r.ok = ok;
  r.verdict = ok ? Verdict::Bounded : Verdict::Fail;
  r.summary = std::to_string(runs) + " backend/generator cases under bound 6, " + std::to_string(finite) +
              " finite algebras" +
              (failures.empty() ? "" : ", failing:" + failures);
  return r;
}

CriterionResult criterion_csem() {
  auto r = started(7, "N(S) and E_e valid and non-isomorphic on commutative semigroups");
  const auto t0 = Clock::now();
  const auto cs = comm_semigroup_backend();
  const auto id = identity_morphism(cs);
  std::size_t cases = 0, good = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& a : find_models(cs->presentation(), n)) {
      const auto s = CarrierObject::finite(cs, a);
      const auto nn = n_phi(id, s);
      const auto cp = copower(s, 2);
      const auto homs = enumerate_homs(a, a);
      for (std::size_t e = 0; e < n; ++e) {
        if (a.apply(0, std::vector<std::size_t>{e, e}) != e) continue;
        const Element ee = cp.object()->apply(
            "m", std::vector<Element>{cp.injection(0)(Element::index(e)), cp.injection(1)(Element::index(e))});
        Coalgebra ec("E", cs->presentation(), s, {{"m", Hom(s, cp.object(), std::vector<Element>(n, ee))}});
        const bool valid = verify_coalgebra(nn).ok && verify_coalgebra(ec).ok;
        bool iso = false;
        for (const auto& h : homs) {
          if (std::set<std::size_t>(h.table.begin(), h.table.end()).size() != n) continue;
          std::vector<Element> images;
          for (auto v : h.table) images.push_back(Element::index(v));
          if (is_coalgebra_morphism(nn, ec, Hom(s, s, images))) {
            iso = true;
            break;
          }
        }
        ++cases;
        if (valid && (n >= 2 ? !iso : iso)) ++good;
      }
    }
  r.seconds = seconds_since(t0);
  r.ok = good == cases;
  r.summary = std::to_string(good) + "/" + std::to_string(cases) + " (semigroup, idempotent) pairs";
  return r;
}

CriterionResult criterion_matrix() {
  auto r = started(8, "matrix comonoid n <= 3 and induced 2x2 monoid over Z2");
  const auto t0 = Clock::now();
  bool ok = true;
  InducedMonoidCheck induced;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto mc = matrix_comonoid(n);
    ok = ok && mc.report.ok;
    if (n == 2) {
      induced = check_induced_monoid(mc, builtin_ring("Z2"));
      ok = ok && induced.ok() && induced.pairs == 256;
    }
  }
  r.seconds = seconds_since(t0);
  r.ok = ok && r.seconds < 5.0;
  r.summary = "M1..M3 axioms hold; " + std::to_string(induced.agreeing) + "/" + std::to_string(induced.pairs) +
              " products agree";
  return r;
}

CriterionResult criterion_change_of_rings() {
  auto r = started(9, "change of rings along Z4 -> Z2");
  const auto t0 = Clock::now();
  const auto z4 = builtin_ring("Z4");
  const auto z2 = builtin_ring("Z2");
  const auto rep = change_of_rings(canonical_projection(z4, z2), modules_up_to_iso(z4, 4), modules_up_to_iso(z2, 4));
  r.seconds = seconds_since(t0);
  r.ok = rep.ok;
  r.summary = std::to_string(rep.bijections) + " adjunction bijections";
  return r;
}

CriterionResult criterion_closure() {
  auto r = started(10, "group-likes form a submonoid, primitives a submodule");
  const auto t0 = Clock::now();
  bool ok = true;
  std::string failures;
  const auto names = stored_bialgebra_names();
  for (const auto& name : names) {
    const auto c = check_closure(stored_bialgebra(name));
    if (!c.submonoid || !c.submodule) failures += " " + name + " (" + c.witness + ")";
    ok = ok && c.submonoid && c.submodule;
  }
  r.seconds = seconds_since(t0);
  r.ok = ok;
  r.summary = std::to_string(names.size()) + " stored bialgebras" + (failures.empty() ? "" : ", failing:" + failures);
  return r;
}

struct Example {
  std::string label;
  std::function<Report()> run;
  Verdict expected;
  std::function<bool(const Report&)> extra = nullptr;
};

bool detail_has(const Report& r, const std::string& check, const std::string& key, const Json& value) {
  for (const auto& d : r.details)
    if (d.at("check") == check && d.contains(key) && d.at(key) == value) return true;
  return false;
}

void run_examples(Report& out, const std::vector<Example>& examples) {
  for (const auto& ex : examples) {
    Json extra = {{"expected", to_string(ex.expected)}};
    bool pass = false;
    try {
      const auto r = ex.run();
      extra["got"] = to_string(r.verdict());
      pass = r.verdict() == ex.expected && (!ex.extra || ex.extra(r));
    } catch (const Error& e) {
      extra["error"] = e.what();
    }
    if (!pass) out.witness({{"example", ex.label}});
    out.add(ex.label, verdict_of(pass), std::move(extra));
  }
}

Report paper_examples(const Workspace& ws) {
  Report out;
  out.command = "suite";
  out.inputs = {{"suite", "paper-examples"}};
  const auto none = std::nullopt;
  std::vector<Example> examples = {
      {"check V_Grp_x", [&] { return cmd_check(ws, "V_Grp_x"); }, Verdict::Ok},
      {"check Triv", [&] { return cmd_check(ws, "Triv"); }, Verdict::Ok},
      {"check BadMorphism", [&] { return cmd_check(ws, "BadMorphism"); }, Verdict::Fail,
       [](const Report& r) { return !r.witnesses.empty(); }},
      {"check Kan_x", [&] { return cmd_check(ws, "Kan_x"); }, Verdict::Ok},
      {"check N_L2", [&] { return cmd_check(ws, "N_L2"); }, Verdict::Ok},
      {"check E_L2", [&] { return cmd_check(ws, "E_L2"); }, Verdict::Ok},
      {"check Skew_L2", [&] { return cmd_check(ws, "Skew_L2"); }, Verdict::Fail},
      {"group-likes of F2C2", [&] { return cmd_gphi(ws, "group-like", "F2C2", none); }, Verdict::Ok,
       [](const Report& r) { return detail_has(r, "G", "members", Json::array({"1", "x"})); }},
      {"primitives of F2x2", [&] { return cmd_gphi(ws, "primitive", "F2x2", none); }, Verdict::Ok,
       [](const Report& r) { return detail_has(r, "G", "members", Json::array({"0", "x"})); }},
      {"primitives of F2C2", [&] { return cmd_gphi(ws, "primitive", "F2C2", none); }, Verdict::Ok,
       [](const Report& r) { return detail_has(r, "G", "members", Json::array({"0"})); }},
      {"invariants of the UT2F2 regular bimodule", [&] { return cmd_gphi(ws, "invariants", "UT", none); },
       Verdict::Ok, [](const Report& r) { return detail_has(r, "G", "members", Json::array({0, 5})); }},
      {"G of N(Z/2)", [&] { return cmd_gphi(ws, "id_Ab", "N_C2", none); }, Verdict::Ok,
       [](const Report& r) { return detail_has(r, "subalgebra", "size", 2); }},
      {"V(id_Grp, {x,y}) under bound 4", [&] { return cmd_vphi(ws, "id_Grp", {"x", "y"}, 4); }, Verdict::Bounded},
      {"N(id_cSem, L2)", [&] { return cmd_nphi(ws, "id_cSem", "L2"); }, Verdict::Ok},
      {"N(forget_cSem, C3)", [&] { return cmd_nphi(ws, "forget_cSem", "C3"); }, Verdict::Ok},
      {"Z/2 over (Z/4, Z/4) against Z/2, Z/4", [&] { return cmd_ew(ws, "Z2_Z4", {"Z2_over_Z4", "Z4_over_Z4"}); },
       Verdict::Ok},
      {"zero bimodule", [&] { return cmd_ew(ws, "Zero_Z4", {"Z2_over_Z4", "Z4_over_Z4"}); }, Verdict::Ok},
      {"matrix comonoid M2", [&] { return cmd_hopf(ws, "M2"); }, Verdict::Ok},
      {"bialgebra F2x2", [&] { return cmd_hopf(ws, "F2x2"); }, Verdict::Ok},
      {"bialgebra Z3C2", [&] { return cmd_hopf(ws, "Z3C2"); }, Verdict::Ok},
      {"trivial group algebra Z2C1", [&] { return cmd_gphi(ws, "group-like", "Z2C1", none); }, Verdict::Ok,
       [](const Report& r) { return detail_has(r, "G", "members", Json::array({"1"})); }},
  };
  run_examples(out, examples);
  return out;
}

Report kan_cogroups(const Workspace& ws) {
  Report out;
  out.command = "suite";
  out.inputs = {{"suite", "kan-cogroups"}};
  const auto id = ws.morphisms.at("id_Grp");
  std::vector<Coalgebra> vs;
  for (std::size_t n = 0; n <= 3; ++n) {
    vs.push_back(v_phi(id, letters(n)));
    const auto rep = verify_coalgebra(vs.back());
    out.add("cogroup axioms for V(X), |X| = " + std::to_string(n), verdict_of(rep.ok),
            {{"axioms", rep.equations.size()}});
  }
  const auto kan = verify_coalgebra(ws.coalgebras.at("Kan_x"));
  out.add("comonoid axioms for Kan_x", verdict_of(kan.ok), {{"axioms", kan.equations.size()}});

  // F(f) for f: X -> Y is a coalgebra morphism V(X) -> V(Y).
  const auto induced = [](const Coalgebra& a, const Coalgebra& b, const std::vector<std::size_t>& f) {
    std::vector<Element> images;
    for (auto i : f) images.push_back(b.carrier()->generator(i));
    return Hom(a.carrier(), b.carrier(), images);
  };
  const std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>> maps = {
      {2, 1, {0, 0}}, {1, 2, {1}}, {2, 2, {1, 0}}, {3, 2, {0, 1, 0}}, {0, 1, {}}};
  for (const auto& [from, to, f] : maps) {
    const bool ok = is_coalgebra_morphism(vs[from], vs[to], induced(vs[from], vs[to], f));
    out.add("F(f) : V(" + std::to_string(from) + ") -> V(" + std::to_string(to) + ") is a coalgebra morphism",
            verdict_of(ok));
  }
  // A map that is not of the form F(f): x -> x x.
  {
    const auto& c = vs[1];
    const auto x = c.carrier()->generator(0);
    const auto xx = c.carrier()->apply("m", std::vector<Element>{x, x});
    const bool ok = !is_coalgebra_morphism(c, c, Hom(c.carrier(), c.carrier(), {xx}));
    out.add("x -> x*x is not a coalgebra morphism", verdict_of(ok));
  }

  const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> products = {{1, 1, 3}, {2, 1, 5}, {0, 1, 1}};
  for (const auto& [i, j, expected] : products) {
    const auto p = product_of_cogroups(vs[i], vs[j]);
    const auto rank = p.product.carrier()->rank();
    const bool valid = verify_coalgebra(p.product).ok;
    const bool projections =
        is_coalgebra_morphism(p.product, vs[i], p.first) && is_coalgebra_morphism(p.product, vs[j], p.second);
    out.add("V(" + std::to_string(i) + ") x V(" + std::to_string(j) + ")",
            verdict_of(rank == expected && valid && projections),
            {{"generators", rank}, {"expected", expected}, {"valid", valid}, {"projections", projections}});
  }
  return out;
}

Report acceptance() {
  Report out;
  out.command = "suite";
  out.inputs = {{"suite", "acceptance"}};
  for (const auto& c : acceptance_criteria()) {
    const auto res = c.run();
    out.add("criterion " + std::to_string(res.id), res.ok ? res.verdict : Verdict::Fail,
            {{"title", res.title}, {"summary", res.summary}});
  }
  return out;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "cogroups", criterion_cogroups},
      {2, "classical", criterion_classical},
      {3, "presentation oracle", criterion_presentation_oracle},
      {4, "adjunction", criterion_adjunction},
      {5, "coreflection", criterion_coreflection},
      {6, "canonical coalgebras", criterion_canonical},
      {7, "cSem", criterion_csem},
      {8, "matrix comonoid", criterion_matrix},
      {9, "change of rings", criterion_change_of_rings},
      {10, "closure", criterion_closure},
  };
  return criteria;
}

std::vector<std::string> suite_names() { return {"paper-examples", "kan-cogroups", "acceptance"}; }

Report cmd_suite(const Workspace& ws, const std::string& name) {
  if (name == "paper-examples") return paper_examples(ws);
  if (name == "kan-cogroups") return kan_cogroups(ws);
  if (name == "acceptance") return acceptance();
  throw Error("unknown-suite", "no suite named '" + name + "'");
}

}  // namespace coalg
