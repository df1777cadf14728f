#include "coalg/bimodule/as_coalgebra.hpp"

#include "coalg/backends/registry.hpp"
#include "coalg/bimodule/tensor.hpp"
#include "coalg/error.hpp"

namespace coalg {

Coalgebra bimodule_coalgebra(const Bimodule& m, std::string name) {
  const auto& S = m.left_ring();
  const auto& R = m.right_ring();
  const auto carrier = CarrierObject::finite(module_backend(S), m.left_module().as_algebra());
  const auto cotheory = module_theory(*R);
  const auto two = copower(carrier, 2);
  const auto none = copower(carrier, 0);
  std::vector<Element> plus, zero, neg;
  for (std::size_t x = 0; x < m.size(); ++x) {
    const auto e = Element::index(x);
    const std::vector<Element> pair{two.injection(0)(e), two.injection(1)(e)};
    plus.push_back(two.object()->apply("plus", pair));
    zero.push_back(none.object()->apply("zero", {}));
    neg.push_back(Element::index(m.group().neg(x)));
  }
  std::map<std::string, Hom> coops;
  coops.emplace("plus", Hom(carrier, two.object(), std::move(plus)));
  coops.emplace("zero", Hom(carrier, none.object(), std::move(zero)));
  coops.emplace("neg", Hom(carrier, carrier, std::move(neg)));
  for (std::size_t r = 0; r < R->size(); ++r) {
    std::vector<Element> images;
    for (std::size_t x = 0; x < m.size(); ++x) images.push_back(Element::index(m.right(x, r)));
    coops.emplace(scalar_op(r), Hom(carrier, carrier, std::move(images)));
  }
  if (name.empty()) name = "M";
  return Coalgebra(std::move(name), cotheory, carrier, std::move(coops));
}

Bimodule coalgebra_bimodule(const Coalgebra& c, const RingPtr& right_ring) {
  const auto& carrier = *c.carrier();
  if (carrier.is_free()) throw Error("not-a-bimodule", "carrier must be finite");
  const auto left = FiniteModule::from_algebra(
      [&] {
        const auto& name = carrier.backend().name();
        if (name.rfind("Mod(", 0) != 0) throw Error("not-a-bimodule", "carrier is not a module");
        return builtin_ring(name.substr(4, name.size() - 5));
      }(),
      carrier.algebra());
  const auto& two = c.copower(2);
  std::vector<std::size_t> right(right_ring->size() * left.size());
  for (std::size_t x = 0; x < left.size(); ++x) {
    const auto e = Element::index(x);
    const std::vector<Element> pair{two.injection(0)(e), two.injection(1)(e)};
    if (!(c.coop("plus")(e) == two.object()->apply("plus", pair)))
      throw Error("not-a-bimodule", "comultiplication is not the codiagonal sum");
    for (std::size_t r = 0; r < right_ring->size(); ++r) right[r * left.size() + x] = c.coop(scalar_op(r))(e).as_index();
  }
  return Bimodule(left.ring(), right_ring, left.group(), left.action(), std::move(right));
}

TheoryMorphism module_identity(const RingPtr& ring) { return identity_morphism(module_backend(ring)); }

bool copower_matches_tensor(const Bimodule& m, std::size_t n) {
  const auto& R = m.right_ring();
  const auto regular = CarrierObject::finite(module_backend(R), FiniteModule::regular(R).as_algebra());
  const auto free_cp = copower(regular, n);
  const auto free = FiniteModule::from_algebra(R, free_cp.object()->algebra());
  const auto t = tensor(m, free);
  const auto backend = module_backend(m.left_ring());
  const auto carrier = CarrierObject::finite(backend, m.left_module().as_algebra());
  const auto target = CarrierObject::finite(backend, t.module.as_algebra(), {}, false);
  // ν_k(x) ↦ x ⊗ e_k.
  std::vector<Hom> legs;
  for (std::size_t k = 0; k < n; ++k) {
    const auto e = free_cp.injection(k)(Element::index(R->one())).as_index();
    std::vector<Element> images;
    for (std::size_t x = 0; x < m.size(); ++x) images.push_back(Element::index(t.product.pure(x, e)));
    legs.push_back(Hom::checked(carrier, target, std::move(images)));
  }
  const auto cp = copower(carrier, n);
  const auto f = copair(cp, legs, target);
  if (cp.object()->size() != target->size()) return false;
  std::vector<bool> hit(target->size(), false);
  for (const auto& e : f.images()) {
    if (hit[e.as_index()]) return false;
    hit[e.as_index()] = true;
  }
  try {
    Hom::checked(cp.object(), target, f.images());
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace coalg
