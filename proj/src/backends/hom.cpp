#include "coalg/error.hpp"
#include "coalg/backends/object.hpp"

namespace coalg {

Hom::Hom(ObjectPtr domain, ObjectPtr codomain, std::vector<Element> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  const std::size_t expected = domain_->is_free() ? domain_->rank() : domain_->size();
  if (images_.size() != expected)
    throw Error("not-a-hom", "expected " + std::to_string(expected) + " images, got " + std::to_string(images_.size()));
  if (&domain_->backend() != &codomain_->backend() && domain_->backend().name() != codomain_->backend().name())
    throw Error("backend-mismatch", "hom between objects of different varieties");
  for (const auto& e : images_)
    if (!codomain_->contains(e)) throw Error("not-a-hom", "image outside the codomain");
}

Hom Hom::checked(ObjectPtr domain, ObjectPtr codomain, std::vector<Element> images) {
  Hom h(std::move(domain), std::move(codomain), std::move(images));
  if (h.domain_->is_free()) return h;
  const auto& sig = h.domain_->backend().signature();
  const auto n = h.domain_->size();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const auto arity = sig.op(op).arity;
    if (n == 0 && arity > 0) continue;
    std::vector<std::size_t> t(arity, 0);
    std::vector<Element> imgs(arity);
    while (true) {
      for (std::size_t i = 0; i < arity; ++i) imgs[i] = h.images_[t[i]];
      const auto lhs = h.images_[h.domain_->algebra().apply(op, t)];
      if (!(lhs == h.codomain_->apply(op, imgs)))
        throw Error("not-a-hom", "map does not commute with '" + sig.op(op).name + "'");
      std::size_t i = arity;
      while (i > 0 && ++t[i - 1] == n) t[--i] = 0;
      if (i == 0) break;
    }
  }
  return h;
}

Hom Hom::identity(const ObjectPtr& obj) {
  if (obj->is_free()) {
    std::vector<Element> imgs;
    for (std::size_t i = 0; i < obj->rank(); ++i) imgs.push_back(obj->generator(i));
    return Hom(obj, obj, std::move(imgs));
  }
  return Hom(obj, obj, obj->elements());
}

Element Hom::operator()(const Element& e) const {
  if (domain_->is_free()) return evaluate(*codomain_, domain_->to_term(e), images_);
  if (!domain_->contains(e)) throw Error("not-in-domain", "element outside the hom's domain");
  return images_[e.as_index()];
}

Hom compose(const Hom& g, const Hom& f) {
  if (!same_object(*f.codomain(), *g.domain())) throw Error("not-composable", "codomain/domain mismatch");
  std::vector<Element> imgs;
  imgs.reserve(f.images().size());
  for (const auto& e : f.images()) imgs.push_back(g(e));
  return Hom(f.domain(), g.codomain(), std::move(imgs));
}

HomComparison hom_equal(const Hom& f, const Hom& g) {
  if (!same_object(*f.domain(), *g.domain()) || !same_object(*f.codomain(), *g.codomain()))
    throw Error("not-comparable", "homs have different domain or codomain");
  const auto& dom = *f.domain();
  for (std::size_t i = 0; i < f.images().size(); ++i) {
    if (f.images()[i] == g.images()[i]) continue;
    HomComparison r;
    r.equal = false;
    r.witness = dom.is_free() ? dom.generator(i) : Element::index(i);
    r.left = f.images()[i];
    r.right = g.images()[i];
    return r;
  }
  return {};
}

}  // namespace coalg
