#include "coalg/theory/morphism.hpp"

#include "coalg/error.hpp"

namespace coalg {

const Term& TheoryMorphism::image(const std::string& op) const {
  auto it = assignment.find(op);
  if (it == assignment.end()) throw Error("unknown-op", "morphism " + name + " does not assign '" + op + "'");
  return it->second;
}

TheoryMorphism make_morphism(std::string name, TheoryPresentation source, TheoryPresentation target,
                             std::map<std::string, Term> assignment) {
  for (const auto& [op, t] : assignment)
    if (!source.signature.find(op)) throw Error("unknown-op", "'" + op + "' is not an operation of " + source.name);
  for (const auto& op : source.signature.ops()) {
    auto it = assignment.find(op.name);
    if (it == assignment.end()) throw Error("not-total", "no image for '" + op.name + "'");
    check_term(target.signature, it->second, op.arity);
  }
  return TheoryMorphism{std::move(name), std::move(source), std::move(target), nullptr, std::move(assignment)};
}

TheoryMorphism make_morphism(std::string name, TheoryPresentation source, BackendPtr target,
                             std::map<std::string, Term> assignment) {
  auto phi = make_morphism(std::move(name), std::move(source), target->presentation(), std::move(assignment));
  phi.target_backend = std::move(target);
  return phi;
}

TheoryMorphism identity_morphism(const BackendPtr& backend) {
  std::map<std::string, Term> a;
  for (const auto& op : backend->signature().ops()) {
    std::vector<Term> vars;
    for (std::size_t i = 1; i <= op.arity; ++i) vars.push_back(Term::variable(i));
    a.emplace(op.name, Term::apply(op.name, std::move(vars)));
  }
  return make_morphism("id_" + backend->name(), backend->presentation(), backend, std::move(a));
}

Term translate_term(const TheoryMorphism& phi, const Term& t) {
  if (t.is_var()) return t;
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(translate_term(phi, a));
  return substitute(phi.image(t.op), args);
}

TheoryMorphism compose(const TheoryMorphism& psi, const TheoryMorphism& phi) {
  if (!(phi.target.signature == psi.source.signature))
    throw Error("not-composable", phi.name + " does not land in the source of " + psi.name);
  std::map<std::string, Term> a;
  for (const auto& [op, t] : phi.assignment) a.emplace(op, translate_term(psi, t));
  auto out = make_morphism(psi.name + "." + phi.name, phi.source, psi.target, std::move(a));
  out.target_backend = psi.target_backend;
  return out;
}

MorphismValidation validate_theory_morphism(const TheoryMorphism& phi) {
  if (!phi.target_backend) throw Error("no-backend", "target of " + phi.name + " has no decision procedure attached");
  const auto& b = *phi.target_backend;
  for (std::size_t i = 0; i < phi.source.equations.size(); ++i) {
    const auto& eq = phi.source.equations[i];
    const auto l = b.nf(translate_term(phi, eq.lhs), eq.context);
    const auto r = b.nf(translate_term(phi, eq.rhs), eq.context);
    if (l == r) continue;
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= eq.context; ++k) names.push_back("x" + std::to_string(k));
    return MorphismValidation{false, i, b.free_show(l, names), b.free_show(r, names)};
  }
  return {};
}

}  // namespace coalg
