#include "coalg/cli/workspace.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "coalg/backends/registry.hpp"
#include "coalg/coalgebra/canonical.hpp"
#include "coalg/error.hpp"
#include "coalg/theory/dsl_lexer.hpp"
#include "coalg/theory/presentation.hpp"

namespace coalg {

namespace {

const std::set<std::string> kBlocks{"theory", "ring", "algebra", "morphism", "coalgebra", "module", "bimodule", "bialgebra"};

bool at_block(const TokenStream& ts) {
  const auto& t = ts.peek();
  return t.kind == Token::Kind::End || (t.kind == Token::Kind::Ident && kBlocks.count(t.text));
}

template <class Map>
void define(Map& map, const std::string& kind, const std::string& name, typename Map::mapped_type value) {
  if (!map.emplace(name, std::move(value)).second) throw Error("duplicate-name", kind + " '" + name + "' defined twice");
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& kind, const std::string& name) {
  auto it = map.find(name);
  if (it == map.end()) throw Error("unknown-name", "no " + kind + " named '" + name + "'");
  return it->second;
}

std::vector<std::size_t> parse_table(TokenStream& ts) {
  std::vector<std::size_t> out;
  ts.expect("[");
  while (!ts.accept("]")) {
    out.push_back(ts.expect_number());
    ts.accept(",");
  }
  return out;
}

/// `Grp`, `Mod(Z4)`, `cAlg(F2)`.
std::string parse_variety_name(TokenStream& ts) {
  auto name = ts.expect_ident();
  if (ts.at("(") && ts.peek(1).kind == Token::Kind::Ident && ts.peek(2).text == ")") {
    ts.next();
    name += "(" + ts.next().text + ")";
    ts.next();
  }
  return name;
}

/// An element name: a number (finite carriers) or an identifier.
std::string parse_element_name(TokenStream& ts) {
  const auto& t = ts.peek();
  if (t.kind != Token::Kind::Number && t.kind != Token::Kind::Ident) ts.fail("expected element");
  return ts.next().text;
}

/// R/kR with the action induced by multiplication on `side`.
struct Quotient {
  std::size_t size = 0;
  std::vector<std::size_t> cls;  // ring element -> class
  std::vector<std::size_t> rep;  // class -> representative
  std::vector<std::size_t> add;
};

Quotient quotient_by(const FiniteRing& R, std::size_t k) {
  const auto kk = R.from_integer(static_cast<long long>(k));
  std::set<std::size_t> ideal;
  for (std::size_t s = 0; s < R.size(); ++s) ideal.insert(R.mul(kk, s));
  Quotient q;
  q.cls.assign(R.size(), SIZE_MAX);
  for (std::size_t r = 0; r < R.size(); ++r) {
    if (q.cls[r] != SIZE_MAX) continue;
    for (auto i : ideal) q.cls[R.add(r, i)] = q.size;
    q.rep.push_back(r);
    ++q.size;
  }
  q.add.resize(q.size * q.size);
  for (std::size_t a = 0; a < q.size; ++a)
    for (std::size_t b = 0; b < q.size; ++b) q.add[a * q.size + b] = q.cls[R.add(q.rep[a], q.rep[b])];
  return q;
}

class Parser {
 public:
  Parser(Workspace& ws, std::string_view text) : ws_(ws), ts_(text) {}

  void run() {
    while (!ts_.at_end()) {
      const auto& t = ts_.peek();
      if (t.kind != Token::Kind::Ident || !kBlocks.count(t.text)) ts_.fail("expected a block keyword");
      if (t.text == "theory") theory();
      else if (t.text == "ring") ring();
      else if (t.text == "algebra") algebra();
      else if (t.text == "morphism") morphism();
      else if (t.text == "coalgebra") coalgebra();
      else if (t.text == "module") module();
      else if (t.text == "bimodule") bimodule();
      else bialgebra();
    }
  }

 private:
  void theory() {
    auto th = parse_theory_block(ts_, kBlocks);
    const auto name = th.name;
    define(ws_.theories, "theory", name, std::move(th));
  }

  void ring() {
    ts_.expect("ring");
    const auto name = ts_.expect_ident();
    if (ts_.accept("=")) {
      define(ws_.rings, "ring", name, builtin_ring(ts_.expect_ident()));
      return;
    }
    ts_.expect("size");
    const auto size = ts_.expect_number();
    ts_.expect("add");
    auto add = parse_table(ts_);
    ts_.expect("mul");
    auto mul = parse_table(ts_);
    ts_.expect("zero");
    const auto zero = ts_.expect_number();
    ts_.expect("one");
    const auto one = ts_.expect_number();
    define(ws_.rings, "ring", name,
           std::make_shared<const FiniteRing>(name, size, std::move(add), std::move(mul), zero, one));
  }

  void algebra() {
    ts_.expect("algebra");
    const auto name = ts_.expect_ident();
    ts_.expect(":");
    const auto theory_name = parse_variety_name(ts_);
    const auto th = ws_.theory(theory_name);
    ts_.expect("size");
    const auto size = ts_.expect_number();
    std::map<std::string, std::vector<std::size_t>> tables;
    std::vector<std::string> labels;
    while (!at_block(ts_)) {
      if (ts_.accept("labels")) {
        ts_.expect("[");
        while (!ts_.accept("]")) {
          labels.push_back(parse_element_name(ts_));
          ts_.accept(",");
        }
        continue;
      }
      ts_.expect("table");
      const auto op = ts_.expect_ident();
      ts_.expect("=");
      tables[op] = parse_table(ts_);
    }
    std::vector<std::vector<std::size_t>> ordered;
    for (const auto& decl : th.signature.ops()) {
      auto it = tables.find(decl.name);
      if (it == tables.end()) throw Error("missing-table", "algebra " + name + " has no table for '" + decl.name + "'");
      ordered.push_back(it->second);
      tables.erase(it);
    }
    if (!tables.empty()) throw Error("unknown-op", "algebra " + name + " gives a table for '" + tables.begin()->first + "'");
    if (!labels.empty() && labels.size() != size) throw Error("bad-labels", "algebra " + name + " needs one label per element");
    define(ws_.algebras, "algebra", name, WorkspaceAlgebra{theory_name, FiniteAlgebra(th.signature, size, std::move(ordered)), labels});
  }

  void morphism() {
    ts_.expect("morphism");
    const auto name = ts_.expect_ident();
    ts_.expect(":");
    const auto source = ws_.theory(parse_variety_name(ts_));
    ts_.expect("->");
    const auto target_name = parse_variety_name(ts_);
    std::map<std::string, Term> assignment;
    while (!at_block(ts_) && ts_.peek(1).text == "->") {
      const auto op = ts_.expect_ident();
      ts_.expect("->");
      assignment[op] = parse_term(ts_);
      ts_.accept(";");
    }
    if (ws_.theories.count(target_name)) {
      define(ws_.morphisms, "morphism", name, make_morphism(name, source, ws_.theories.at(target_name), std::move(assignment)));
    } else {
      define(ws_.morphisms, "morphism", name, make_morphism(name, source, ws_.backend(target_name), std::move(assignment)));
    }
  }

  void coalgebra() {
    ts_.expect("coalgebra");
    const auto name = ts_.expect_ident();
    if (ts_.accept("=")) {
      canonical_coalgebra(name);
      return;
    }
    ts_.expect(":");
    const auto cotheory = ws_.theory(parse_variety_name(ts_));
    ts_.expect("in");
    const auto backend = ws_.backend(parse_variety_name(ts_));
    ts_.expect("carrier");
    ObjectPtr carrier;
    std::map<std::string, std::size_t> names;
    if (ts_.accept("free")) {
      auto gens = generator_list();
      for (std::size_t i = 0; i < gens.size(); ++i) names[gens[i]] = i;
      carrier = CarrierObject::free_on(backend, std::move(gens));
    } else {
      ts_.expect("finite");
      const auto alg_name = ts_.expect_ident();
      const auto& alg = lookup(ws_.algebras, "algebra", alg_name);
      carrier = CarrierObject::finite(backend, alg.algebra, alg.labels);
      for (std::size_t i = 0; i < alg.algebra.size(); ++i) {
        names[std::to_string(i)] = i;
        if (!alg.labels.empty()) names[alg.labels[i]] = i;
      }
    }
    auto element = [&](const std::string& label) {
      auto it = names.find(label);
      if (it == names.end()) throw Error("unknown-element", "'" + label + "' is not an element of the carrier of " + name);
      return carrier->is_free() ? carrier->generator(it->second) : Element::index(it->second);
    };
    const auto points = carrier->is_free() ? carrier->rank() : carrier->size();
    std::map<std::string, std::vector<std::optional<Element>>> images;
    std::map<std::size_t, Coproduct> copowers;
    while (ts_.accept("coop")) {
      const auto op = ts_.expect_ident();
      if (!cotheory.signature.find(op)) ts_.fail("'" + op + "' is not an operation of " + cotheory.name);
      const auto arity = cotheory.signature.arity(op);
      const auto label = parse_element_name(ts_);
      auto found = names.find(label);
      if (found == names.end()) throw Error("unknown-element", "'" + label + "' is not an element of the carrier of " + name);
      const auto index = found->second;
      ts_.expect("->");
      auto cp_it = copowers.find(arity);
      if (cp_it == copowers.end()) cp_it = copowers.emplace(arity, copower(carrier, arity)).first;
      const auto& cp = cp_it->second;
      std::vector<Element> env;
      auto body = parse_term(ts_, [&](const std::string& base, std::size_t copy, const Token& where) {
        if (copy < 1 || copy > arity) ts_.fail_at(where, "copy index out of range for '" + op + "'");
        env.push_back(cp.injection(copy - 1)(element(base)));
        return Term::variable(env.size());
      });
      ts_.accept(";");
      auto& slot = images[op];
      slot.resize(points);
      if (slot[index]) throw Error("duplicate-coop", "co-operation " + op + " given twice on one element in " + name);
      slot[index] = evaluate(*cp.object(), body, env);
    }
    std::map<std::string, Hom> coops;
    for (const auto& decl : cotheory.signature.ops()) {
      auto it = images.find(decl.name);
      if (it == images.end()) throw Error("missing-coop", name + " has no co-operation for '" + decl.name + "'");
      std::vector<Element> table;
      for (std::size_t i = 0; i < points; ++i) {
        if (!it->second[i]) throw Error("missing-coop", name + ": '" + decl.name + "' is not defined on every element");
        table.push_back(*it->second[i]);
      }
      auto cp_it = copowers.find(decl.arity);
      if (cp_it == copowers.end()) cp_it = copowers.emplace(decl.arity, copower(carrier, decl.arity)).first;
      coops.emplace(decl.name, Hom(carrier, cp_it->second.object(), std::move(table)));
    }
    define(ws_.coalgebras, "coalgebra", name, Coalgebra(name, cotheory, carrier, std::move(coops)));
  }

  std::vector<std::string> generator_list() {
    std::vector<std::string> gens;
    ts_.expect("{");
    while (!ts_.accept("}")) {
      gens.push_back(ts_.expect_ident());
      ts_.accept(",");
    }
    return gens;
  }

  void canonical_coalgebra(const std::string& name) {
    const auto kind = ts_.expect_ident();
    ts_.expect("(");
    const auto& phi = lookup(ws_.morphisms, "morphism", ts_.expect_ident());
    ts_.expect(",");
    if (kind == "V") {
      auto gens = generator_list();
      ts_.expect(")");
      define(ws_.coalgebras, "coalgebra", name, v_phi(phi, gens, name));
    } else if (kind == "N") {
      const auto alg = ts_.expect_ident();
      ts_.expect(")");
      define(ws_.coalgebras, "coalgebra", name, n_phi(phi, ws_.algebra_object(alg), name));
    } else {
      ts_.fail("expected V(...) or N(...)");
    }
  }

  void module() {
    ts_.expect("module");
    const auto name = ts_.expect_ident();
    ts_.expect(":");
    const auto R = ws_.ring(ts_.expect_ident());
    Side side = Side::Left;
    if (ts_.accept("right")) side = Side::Right;
    else ts_.accept("left");
    if (ts_.accept("regular")) {
      define(ws_.modules, "module", name, FiniteModule::regular(R, side));
    } else if (ts_.accept("zero")) {
      define(ws_.modules, "module", name, FiniteModule::zero(R, side));
    } else if (ts_.accept("quotient")) {
      const auto q = quotient_by(*R, ts_.expect_number());
      std::vector<std::size_t> act(R->size() * q.size);
      for (std::size_t r = 0; r < R->size(); ++r)
        for (std::size_t c = 0; c < q.size; ++c)
          act[r * q.size + c] = q.cls[side == Side::Left ? R->mul(r, q.rep[c]) : R->mul(q.rep[c], r)];
      define(ws_.modules, "module", name, FiniteModule::from_tables(R, side, q.size, q.add, std::move(act)));
    } else {
      ts_.expect("size");
      const auto size = ts_.expect_number();
      ts_.expect("add");
      auto add = parse_table(ts_);
      ts_.expect("act");
      auto act = parse_table(ts_);
      define(ws_.modules, "module", name, FiniteModule::from_tables(R, side, size, add, std::move(act)));
    }
  }

  void bimodule() {
    ts_.expect("bimodule");
    const auto name = ts_.expect_ident();
    ts_.expect(":");
    const auto S = ws_.ring(ts_.expect_ident());
    ts_.expect(",");
    const auto R = ws_.ring(ts_.expect_ident());
    if (ts_.accept("regular")) {
      if (S != R) throw Error("ring-mismatch", "regular bimodule " + name + " needs equal rings");
      define(ws_.bimodules, "bimodule", name, Bimodule::regular(R));
    } else if (ts_.accept("zero")) {
      define(ws_.bimodules, "bimodule", name, Bimodule::zero(S, R));
    } else if (ts_.accept("quotient")) {
      if (S != R) throw Error("ring-mismatch", "quotient bimodule " + name + " needs equal rings");
      const auto q = quotient_by(*R, ts_.expect_number());
      std::vector<std::size_t> left(R->size() * q.size), right(R->size() * q.size);
      for (std::size_t r = 0; r < R->size(); ++r)
        for (std::size_t c = 0; c < q.size; ++c) {
          left[r * q.size + c] = q.cls[R->mul(r, q.rep[c])];
          right[r * q.size + c] = q.cls[R->mul(q.rep[c], r)];
        }
      define(ws_.bimodules, "bimodule", name,
             Bimodule(S, R, FiniteAbelianGroup::from_table(q.size, q.add), std::move(left), std::move(right)));
    } else {
      ts_.expect("size");
      const auto size = ts_.expect_number();
      ts_.expect("add");
      auto add = parse_table(ts_);
      ts_.expect("left");
      auto left = parse_table(ts_);
      ts_.expect("right");
      auto right = parse_table(ts_);
      define(ws_.bimodules, "bimodule", name,
             Bimodule(S, R, FiniteAbelianGroup::from_table(size, add), std::move(left), std::move(right)));
    }
  }

  void bialgebra() {
    ts_.expect("bialgebra");
    const auto name = ts_.expect_ident();
    if (ts_.accept("=")) {
      const auto kind = ts_.expect_ident();
      ts_.expect("(");
      if (kind == "stored") {
        const auto stored = ts_.expect_ident();
        ts_.expect(")");
        define(ws_.bialgebras, "bialgebra", name, stored_bialgebra(stored));
        return;
      }
      const auto R = ws_.ring(ts_.expect_ident());
      ts_.expect(",");
      if (kind == "group_algebra") {
        const auto g = ts_.expect_ident();
        if (g.size() < 2 || g[0] != 'C') ts_.fail("expected a cyclic group C<n>");
        ts_.expect(")");
        define(ws_.bialgebras, "bialgebra", name, group_algebra(R, cyclic_group(std::stoul(g.substr(1))), {}, name));
      } else if (kind == "truncated") {
        const auto n = ts_.expect_number();
        ts_.expect(")");
        define(ws_.bialgebras, "bialgebra", name, truncated_polynomial(R, n, "x", name));
      } else {
        ts_.fail("expected group_algebra, truncated or stored");
      }
      return;
    }
    ts_.expect(":");
    const auto& alg = lookup(ws_.algebras, "algebra", ts_.expect_ident());
    const auto& th = alg.theory;
    if (th.rfind("cAlg(", 0) != 0) throw Error("not-an-algebra", "bialgebra " + name + " needs an algebra over cAlg(R)");
    const auto R = ws_.ring(th.substr(5, th.size() - 6));
    std::map<std::string, std::size_t> names;
    for (std::size_t i = 0; i < alg.algebra.size(); ++i) {
      names[std::to_string(i)] = i;
      if (!alg.labels.empty()) names[alg.labels[i]] = i;
    }
    auto element = [&] {
      const auto label = parse_element_name(ts_);
      auto it = names.find(label);
      if (it == names.end()) throw Error("unknown-element", "'" + label + "' is not an element of " + name);
      return it->second;
    };
    std::map<std::size_t, TensorSum> delta;
    std::map<std::size_t, std::size_t> counit;
    std::optional<std::map<std::size_t, std::size_t>> antipode;
    while (!at_block(ts_)) {
      if (ts_.accept("delta")) {
        const auto a = element();
        ts_.expect("->");
        TensorSum sum;
        do {
          const auto b = element();
          ts_.expect("*");
          sum.emplace_back(b, element());
        } while (ts_.accept("+"));
        delta[a] = std::move(sum);
      } else if (ts_.accept("counit")) {
        const auto a = element();
        ts_.expect("->");
        counit[a] = ts_.expect_number();
      } else {
        ts_.expect("antipode");
        const auto a = element();
        ts_.expect("->");
        if (!antipode) antipode.emplace();
        (*antipode)[a] = element();
      }
      ts_.accept(";");
    }
    auto algebra = CommAlgebra::from_algebra(R, alg.algebra);
    std::vector<std::string> labels = alg.labels;
    if (labels.empty())
      for (std::size_t i = 0; i < alg.algebra.size(); ++i) labels.push_back(std::to_string(i));
    CommAlgebra named(R, algebra.group(), algebra.mul_table(), algebra.scalar_table(), algebra.one(), labels, false);
    define(ws_.bialgebras, "bialgebra", name, FiniteBialgebra(name, std::move(named), delta, counit, antipode));
  }

  Workspace& ws_;
  TokenStream ts_;
};

}  // namespace

RingPtr Workspace::ring(const std::string& name) const {
  if (auto it = rings.find(name); it != rings.end()) return it->second;
  return builtin_ring(name);
}

BackendPtr Workspace::backend(const std::string& name) const {
  if (auto it = backend_cache_.find(name); it != backend_cache_.end()) return it->second;
  auto b = backend_by_name(name, [this](const std::string& r) { return ring(r); });
  backend_cache_.emplace(name, b);
  return b;
}

TheoryPresentation Workspace::theory(const std::string& name) const {
  if (auto it = theories.find(name); it != theories.end()) return it->second;
  try {
    return backend(name)->presentation();
  } catch (const Error& e) {
    if (e.kind() == "unknown-backend") throw Error("unknown-name", "no theory named '" + name + "'");
    throw;
  }
}

FiniteBialgebra Workspace::bialgebra(const std::string& name) const {
  if (auto it = bialgebras.find(name); it != bialgebras.end()) return it->second;
  try {
    return stored_bialgebra(name);
  } catch (const Error&) {
    throw Error("unknown-name", "no bialgebra named '" + name + "'");
  }
}

ObjectPtr Workspace::algebra_object(const std::string& name) const {
  const auto& alg = lookup(algebras, "algebra", name);
  return CarrierObject::finite(backend(alg.theory), alg.algebra, alg.labels);
}

std::vector<std::string> Workspace::kinds_of(const std::string& name) const {
  std::vector<std::string> out;
  if (theories.count(name)) out.push_back("theory");
  if (rings.count(name)) out.push_back("ring");
  if (algebras.count(name)) out.push_back("algebra");
  if (morphisms.count(name)) out.push_back("morphism");
  if (coalgebras.count(name)) out.push_back("coalgebra");
  if (modules.count(name)) out.push_back("module");
  if (bimodules.count(name)) out.push_back("bimodule");
  if (bialgebras.count(name)) out.push_back("bialgebra");
  return out;
}

void Workspace::load_text(const std::string& text, const std::string& source) {
  try {
    Parser(*this, text).run();
  } catch (const Error& e) {
    throw Error(e.kind(), source + ": " + std::string(e.what()).substr(e.kind().size() + 2));
  }
  sources.push_back(source);
}

void Workspace::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  load_text(ss.str(), path);
}

const std::string& prelude_text() {
  static const std::string text = R"(# Worked examples available in every workspace.
theory Triv ops eqs

morphism id_Grp : Grp -> Grp m -> m(x1,x2); e -> e; i -> i(x1)
morphism forget_Mon : Mon -> Grp m -> m(x1,x2); e -> e
morphism id_Ab : Ab -> Ab plus -> plus(x1,x2); zero -> zero; neg -> neg(x1)
morphism id_cMon : cMon -> cMon m -> m(x1,x2); e -> e
morphism id_cSem : cSem -> cSem m -> m(x1,x2)
morphism forget_cSem : cSem -> Ab m -> plus(x1,x2)
morphism BadMorphism : Ab -> Grp plus -> m(x1,x2); zero -> e; neg -> i(x1)

coalgebra V_Grp_x = V(id_Grp, {x})
coalgebra V_Grp_xy = V(id_Grp, {x, y})
coalgebra Kan_x = V(forget_Mon, {x})

algebra C2 : Ab size 2 table plus = [0 1 1 0] table zero = [0] table neg = [0 1]
algebra C3 : Ab size 3 table plus = [0 1 2 1 2 0 2 0 1] table zero = [0] table neg = [0 2 1]
algebra L2 : cSem size 2 table m = [0 0 0 1]

coalgebra N_C2 = N(id_Ab, C2)
coalgebra N_C3 = N(forget_cSem, C3)
coalgebra N_L2 = N(id_cSem, L2)
# The constant structure a -> (e,e) at the idempotent e = 0.
coalgebra E_L2 : cSem in cSem carrier finite L2
  coop m 0 -> m(0@1, 0@2)
  coop m 1 -> m(0@1, 0@2)
# a -> (a, e) is not cocommutative.
coalgebra Skew_L2 : cSem in cSem carrier finite L2
  coop m 0 -> m(0@1, 0@2)
  coop m 1 -> m(1@1, 0@2)

bimodule UT : UT2F2, UT2F2 regular
bimodule Z2_Z4 : Z4, Z4 quotient 2
bimodule Zero_Z4 : Z4, Z4 zero
module Z2_over_Z4 : Z4 quotient 2
module Z4_over_Z4 : Z4 regular
)";
  return text;
}

Workspace load_workspace(const std::vector<std::string>& files, bool with_prelude) {
  Workspace ws;
  if (with_prelude) ws.load_text(prelude_text(), "<prelude>");
  for (const auto& f : files) ws.load_file(f);
  return ws;
}

}  // namespace coalg
