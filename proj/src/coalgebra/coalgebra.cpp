#include "coalg/coalgebra/coalgebra.hpp"

#include <mutex>

#include "coalg/error.hpp"

namespace coalg {

struct Coalgebra::Cache {
  std::mutex mutex;
  std::map<std::size_t, Coproduct> copowers;
};

Coalgebra::Coalgebra(std::string name, TheoryPresentation cotheory, ObjectPtr carrier, std::map<std::string, Hom> coops)
    : name_(std::move(name)),
      cotheory_(std::move(cotheory)),
      carrier_(std::move(carrier)),
      coops_(std::move(coops)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& [op, h] : coops_)
    if (!cotheory_.signature.find(op)) throw Error("unknown-op", "co-operation for '" + op + "' which is not in " + cotheory_.name);
  for (const auto& decl : cotheory_.signature.ops()) {
    auto it = coops_.find(decl.name);
    if (it == coops_.end()) throw Error("missing-coop", "no co-operation for '" + decl.name + "'");
    if (!same_object(*it->second.domain(), *carrier_))
      throw Error("domain-mismatch", "co-operation '" + decl.name + "' does not start at the carrier");
    if (!same_object(*it->second.codomain(), *copower(decl.arity).object()))
      throw Error("codomain-mismatch", "co-operation '" + decl.name + "' does not land in " +
                                           std::to_string(decl.arity) + "·carrier");
  }
}

const Hom& Coalgebra::coop(const std::string& op) const {
  auto it = coops_.find(op);
  if (it == coops_.end()) throw Error("unknown-op", "no co-operation '" + op + "'");
  return it->second;
}

const Coproduct& Coalgebra::copower(std::size_t n) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->copowers.find(n);
  if (it == cache_->copowers.end()) it = cache_->copowers.emplace(n, coalg::copower(carrier_, n)).first;
  return it->second;
}

Hom derive_coop(const Coalgebra& c, const Term& t, std::size_t context) {
  const auto& target = c.copower(context);
  if (t.is_var()) {
    if (t.var < 1 || t.var > context) throw Error("var-out-of-context", "x" + std::to_string(t.var));
    return target.injection(t.var - 1);
  }
  const auto& coop = c.coop(t.op);
  std::vector<Hom> parts;
  parts.reserve(t.args.size());
  for (const auto& a : t.args) parts.push_back(derive_coop(c, a, context));
  if (parts.size() != c.cotheory().signature.arity(t.op)) throw Error("arity-mismatch", "in term " + to_string(t));
  return compose(copair(c.copower(parts.size()), parts, target.object()), coop);
}

const EquationCheck* CoalgebraReport::first_failure() const {
  for (const auto& e : equations)
    if (!e.ok) return &e;
  return nullptr;
}

CoalgebraReport verify_coalgebra(const Coalgebra& c) {
  CoalgebraReport report;
  const auto& eqs = c.cotheory().equations;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const auto& eq = eqs[i];
    EquationCheck check;
    check.index = i;
    check.equation = to_string(eq);
    const auto lhs = derive_coop(c, eq.lhs, eq.context);
    const auto rhs = derive_coop(c, eq.rhs, eq.context);
    const auto cmp = hom_equal(lhs, rhs);
    if (!cmp.equal) {
      const auto& target = *lhs.codomain();
      check.ok = false;
      check.witness = c.carrier()->show(*cmp.witness);
      check.lhs = target.show(cmp.left);
      check.rhs = target.show(cmp.right);
      report.ok = false;
    }
    report.equations.push_back(std::move(check));
  }
  return report;
}

MorphismReport verify_morphism(const Coalgebra& a, const Coalgebra& b, const Hom& f) {
  if (a.cotheory().signature != b.cotheory().signature)
    throw Error("cotheory-mismatch", "coalgebras over different cotheories");
  if (!same_object(*f.domain(), *a.carrier()) || !same_object(*f.codomain(), *b.carrier()))
    throw Error("not-comparable", "map does not run between the carriers");
  MorphismReport report;
  for (const auto& decl : a.cotheory().signature.ops()) {
    const auto n = decl.arity;
    const std::vector<Hom> legs(n, f);
    const auto nf = coproduct_of_homs(a.copower(n), b.copower(n), legs);
    const auto lhs = compose(nf, a.coop(decl.name));
    const auto rhs = compose(b.coop(decl.name), f);
    const auto cmp = hom_equal(lhs, rhs);
    MorphismCheck check{decl.name, cmp.equal, "", "", ""};
    if (!cmp.equal) {
      check.witness = a.carrier()->show(*cmp.witness);
      check.lhs = lhs.codomain()->show(cmp.left);
      check.rhs = rhs.codomain()->show(cmp.right);
      report.ok = false;
    }
    report.ops.push_back(std::move(check));
  }
  return report;
}

bool is_coalgebra_morphism(const Coalgebra& a, const Coalgebra& b, const Hom& f) {
  for (const auto& decl : a.cotheory().signature.ops()) {
    const auto n = decl.arity;
    const std::vector<Hom> legs(n, f);
    const auto nf = coproduct_of_homs(a.copower(n), b.copower(n), legs);
    if (!hom_equal(compose(nf, a.coop(decl.name)), compose(b.coop(decl.name), f)).equal) return false;
  }
  return true;
}

}  // namespace coalg
