#include <map>
#include <mutex>
#include <optional>

#include "coalg/backends/object.hpp"
#include "coalg/error.hpp"

namespace coalg {

struct Coproduct::Lazy {
  std::once_flag once;
  std::vector<Term> decomposition;
};

namespace {

// Terms for every element of the finite coproduct, found by breadth-first
// closure from the injected elements.  Each round only combines tuples that
// use at least one element discovered in the previous round.
std::vector<Term> decompose(const Coproduct& cp) {
  const auto& obj = *cp.object();
  const auto& alg = obj.algebra();
  const auto& sig = alg.signature();
  std::vector<std::optional<Term>> found(alg.size());
  std::vector<std::size_t> known;
  auto learn = [&](std::size_t e, Term t) {
    if (found[e]) return;
    found[e] = std::move(t);
    known.push_back(e);
  };
  for (std::size_t k = 0; k < cp.arity(); ++k) {
    const auto& inj = cp.injection(k);
    for (std::size_t a = 0; a < inj.images().size(); ++a)
      learn(inj.images()[a].as_index(), Term::variable(cp.offset(k) + a + 1));
  }
  for (std::size_t op = 0; op < sig.size(); ++op)
    if (sig.op(op).arity == 0) learn(alg.apply(op, {}), Term::apply(sig.op(op).name));

  std::size_t old_end = 0;
  while (old_end < known.size() && known.size() < alg.size()) {
    const std::size_t new_end = known.size();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const auto arity = sig.op(op).arity;
      if (arity == 0) continue;
      std::vector<std::size_t> pick(arity);
      std::vector<std::size_t> args(arity);
      // Position `first_new` is the first argument drawn from the new range.
      for (std::size_t first_new = 0; first_new < arity; ++first_new) {
        auto lo = [&](std::size_t p) { return p == first_new ? old_end : 0; };
        auto hi = [&](std::size_t p) { return p < first_new ? old_end : new_end; };
        bool empty = false;
        for (std::size_t p = 0; p < arity; ++p) {
          pick[p] = lo(p);
          if (lo(p) >= hi(p)) empty = true;
        }
        if (empty) continue;
        while (true) {
          for (std::size_t p = 0; p < arity; ++p) args[p] = known[pick[p]];
          const auto r = alg.apply(op, args);
          if (!found[r]) {
            std::vector<Term> sub;
            for (auto a : args) sub.push_back(*found[a]);
            learn(r, Term::apply(sig.op(op).name, std::move(sub)));
          }
          bool more = false;
          for (std::size_t p = arity; p-- > 0;) {
            if (++pick[p] < hi(p)) {
              more = true;
              break;
            }
            pick[p] = lo(p);
          }
          if (!more) break;
        }
      }
    }
    old_end = new_end;
  }
  std::vector<Term> out;
  out.reserve(alg.size());
  for (std::size_t e = 0; e < alg.size(); ++e) {
    if (!found[e]) throw Error("not-a-coproduct", "coproduct element " + std::to_string(e) + " is not generated by the injections");
    out.push_back(std::move(*found[e]));
  }
  return out;
}

std::string tagged(const std::string& name, std::size_t k) { return name + std::string(k + 1, '\''); }

}  // namespace

const std::vector<Term>& Coproduct::decomposition() const {
  if (object_->is_free()) throw Error("not-finite", "decomposition applies to finite coproducts");
  std::call_once(lazy_->once, [&] { lazy_->decomposition = decompose(*this); });
  return lazy_->decomposition;
}

Coproduct coproduct(const BackendPtr& backend, std::vector<ObjectPtr> objects, bool finite_when_empty) {
  Coproduct cp;
  cp.lazy_ = std::make_shared<Coproduct::Lazy>();
  cp.factors_ = objects;
  std::size_t free_count = 0;
  for (const auto& o : objects) {
    if (o->backend().name() != backend->name()) throw Error("backend-mismatch", "coproduct across varieties");
    if (o->is_free()) ++free_count;
  }
  if (free_count != 0 && free_count != objects.size())
    throw Error("capability-unsupported", "coproducts mixing free and finite carriers");

  if (objects.size() == 1) {
    cp.object_ = objects[0];
    cp.offsets_ = {0};
    cp.injections_.push_back(Hom::identity(objects[0]));
    return cp;
  }

  const bool free = objects.empty() ? !finite_when_empty : free_count > 0;
  if (free) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < objects.size(); ++k) {
      cp.offsets_.push_back(names.size());
      for (const auto& g : objects[k]->generator_names()) names.push_back(tagged(g, k));
    }
    cp.object_ = CarrierObject::free_on(backend, names);
    for (std::size_t k = 0; k < objects.size(); ++k) {
      std::vector<Element> imgs;
      for (std::size_t i = 0; i < objects[k]->rank(); ++i) imgs.push_back(cp.object_->generator(cp.offsets_[k] + i));
      cp.injections_.emplace_back(objects[k], cp.object_, std::move(imgs));
    }
    return cp;
  }

  if (!backend->has_finite_coproducts())
    throw Error("capability-unsupported", "variety " + backend->name() + " has no finite coproducts of finite algebras");
  std::vector<const FiniteAlgebra*> algs;
  std::size_t offset = 0;
  for (const auto& o : objects) {
    algs.push_back(&o->algebra());
    cp.offsets_.push_back(offset);
    offset += o->size();
  }
  auto fc = backend->finite_coproduct(algs);
  cp.object_ = CarrierObject::finite(backend, std::move(fc.algebra), std::move(fc.labels), false);
  for (std::size_t k = 0; k < objects.size(); ++k) {
    std::vector<Element> imgs;
    for (auto v : fc.injections[k]) imgs.push_back(Element::index(v));
    cp.injections_.emplace_back(objects[k], cp.object_, std::move(imgs));
  }
  return cp;
}

Coproduct copower(const ObjectPtr& obj, std::size_t n) {
  return coproduct(obj->backend_ptr(), std::vector<ObjectPtr>(n, obj), !obj->is_free());
}

Hom copair(const Coproduct& cp, std::span<const Hom> homs, const ObjectPtr& codomain) {
  if (homs.size() != cp.arity()) throw Error("arity-mismatch", "copair needs one hom per coproduct factor");
  for (std::size_t k = 0; k < homs.size(); ++k) {
    if (!same_object(*homs[k].codomain(), *codomain)) throw Error("codomain-mismatch", "copair needs a common codomain");
    if (!same_object(*homs[k].domain(), *cp.factors()[k]))
      throw Error("domain-mismatch", "hom domain differs from coproduct factor");
  }
  if (cp.arity() == 1) return Hom(cp.object(), codomain, homs[0].images());
  if (cp.object()->is_free()) {
    std::vector<Element> imgs;
    for (const auto& h : homs) imgs.insert(imgs.end(), h.images().begin(), h.images().end());
    return Hom(cp.object(), codomain, std::move(imgs));
  }
  std::vector<Element> env;
  for (std::size_t k = 0; k < homs.size(); ++k)
    for (std::size_t a = 0; a < cp.factors()[k]->size(); ++a) env.push_back(homs[k](Element::index(a)));
  const auto& dec = cp.decomposition();
  std::vector<Element> imgs;
  imgs.reserve(dec.size());
  for (const auto& t : dec) imgs.push_back(evaluate(*codomain, t, env));
  return Hom(cp.object(), codomain, std::move(imgs));
}

Hom coproduct_of_homs(const Coproduct& source, const Coproduct& target, std::span<const Hom> homs) {
  if (homs.size() != source.arity() || homs.size() != target.arity())
    throw Error("arity-mismatch", "coproduct of homs needs matching arities");
  std::vector<Hom> legs;
  for (std::size_t k = 0; k < homs.size(); ++k) legs.push_back(compose(target.injection(k), homs[k]));
  return copair(source, legs, target.object());
}

}  // namespace coalg
