#include "coalg/backends/object.hpp"

#include "coalg/error.hpp"

namespace coalg {

ObjectPtr CarrierObject::free_on(BackendPtr backend, std::vector<std::string> generators) {
  std::shared_ptr<CarrierObject> obj(new CarrierObject());
  obj->kind_ = Kind::FreeOn;
  obj->backend_ = std::move(backend);
  obj->generators_ = std::move(generators);
  return obj;
}

ObjectPtr CarrierObject::finite(BackendPtr backend, FiniteAlgebra alg, std::vector<std::string> labels,
                                bool verify) {
  if (!(alg.signature() == backend->signature()))
    throw Error("signature-mismatch", "algebra signature differs from backend " + backend->name());
  if (verify) backend->check_member(alg);
  if (!labels.empty() && labels.size() != alg.size())
    throw Error("table-mismatch", "label count differs from carrier size");
  std::shared_ptr<CarrierObject> obj(new CarrierObject());
  obj->kind_ = Kind::Finite;
  obj->backend_ = std::move(backend);
  obj->algebra_ = std::move(alg);
  obj->labels_ = std::move(labels);
  return obj;
}

Element CarrierObject::generator(std::size_t i) const {
  if (!is_free()) throw Error("not-free", "generators exist only on free carriers");
  if (i >= rank()) throw Error("not-in-domain", "generator index out of range");
  return backend_->free_generator(i, rank());
}

Term CarrierObject::to_term(const Element& e) const {
  if (!is_free()) throw Error("not-free", "term extraction needs a free carrier");
  return backend_->free_to_term(e, rank());
}

std::vector<Element> CarrierObject::elements() const {
  if (is_free()) throw Error("cap-exceeded", "free carriers are infinite; supply an enumeration bound");
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(Element::index(i));
  return out;
}

Element CarrierObject::apply(std::size_t op, std::span<const Element> args) const {
  if (is_free()) return backend_->free_apply(op, args, rank());
  std::size_t buf[8];
  std::vector<std::size_t> big;
  std::span<std::size_t> idx;
  if (args.size() <= 8) {
    idx = std::span<std::size_t>(buf, args.size());
  } else {
    big.resize(args.size());
    idx = big;
  }
  for (std::size_t i = 0; i < args.size(); ++i) idx[i] = args[i].as_index();
  return Element::index(algebra_.apply(op, idx));
}

Element CarrierObject::apply(const std::string& op, std::span<const Element> args) const {
  return apply(backend_->signature().index_of(op), args);
}

bool CarrierObject::contains(const Element& e) const {
  if (!is_free()) return e.code.size() == 1 && e.code[0] >= 0 && static_cast<std::size_t>(e.code[0]) < size();
  return true;
}

std::string CarrierObject::show(const Element& e) const {
  if (is_free()) return backend_->free_show(e, generators_);
  const auto i = e.as_index();
  if (i < labels_.size()) return labels_[i];
  return std::to_string(i);
}

std::string CarrierObject::describe() const {
  if (is_free()) {
    std::string s = backend_->name() + " free{";
    for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? "," : "") + generators_[i];
    return s + "}";
  }
  return backend_->name() + " finite(" + std::to_string(size()) + ")";
}

bool same_object(const CarrierObject& a, const CarrierObject& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind() || a.backend().name() != b.backend().name()) return false;
  if (a.is_free()) return a.generator_names() == b.generator_names();
  return a.algebra() == b.algebra();
}

Element evaluate(const CarrierObject& obj, const Term& t, std::span<const Element> env) {
  if (t.is_var()) {
    if (t.var < 1 || t.var > env.size()) throw Error("var-out-of-context", "unbound variable x" + std::to_string(t.var));
    return env[t.var - 1];
  }
  std::vector<Element> vals;
  vals.reserve(t.args.size());
  for (const auto& a : t.args) vals.push_back(evaluate(obj, a, env));
  return obj.apply(t.op, vals);
}

}  // namespace coalg
