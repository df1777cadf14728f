#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coalg/backends/backend.hpp"

namespace coalg {

class CarrierObject;
using ObjectPtr = std::shared_ptr<const CarrierObject>;

/// An object of the ambient variety: either the free algebra on a finite
/// generator set or a finite algebra of the variety.
class CarrierObject {
 public:
  enum class Kind { FreeOn, Finite };

  static ObjectPtr free_on(BackendPtr backend, std::vector<std::string> generators);
  /// With `verify`, the algebra is checked against the backend's equations.
  static ObjectPtr finite(BackendPtr backend, FiniteAlgebra alg, std::vector<std::string> labels = {},
                          bool verify = true);

  Kind kind() const { return kind_; }
  bool is_free() const { return kind_ == Kind::FreeOn; }
  const VarietyBackend& backend() const { return *backend_; }
  const BackendPtr& backend_ptr() const { return backend_; }

  /// FreeOn only.
  const std::vector<std::string>& generator_names() const { return generators_; }
  std::size_t rank() const { return generators_.size(); }
  Element generator(std::size_t i) const;
  Term to_term(const Element& e) const;

  /// Finite only.
  const FiniteAlgebra& algebra() const { return algebra_; }
  std::size_t size() const { return algebra_.size(); }
  std::vector<Element> elements() const;

  Element apply(std::size_t op, std::span<const Element> args) const;
  Element apply(const std::string& op, std::span<const Element> args) const;
  /// Range check for finite carriers; free carriers accept any canonical code.
  bool contains(const Element& e) const;
  std::string show(const Element& e) const;
  std::string describe() const;

 private:
  CarrierObject() = default;

  Kind kind_ = Kind::FreeOn;
  BackendPtr backend_;
  std::vector<std::string> generators_;
  FiniteAlgebra algebra_;
  std::vector<std::string> labels_;
};

/// Structural equality: same backend, same generators or same tables.
bool same_object(const CarrierObject& a, const CarrierObject& b);

/// Value of `t` in `obj` under x_i = env[i-1].
Element evaluate(const CarrierObject& obj, const Term& t, std::span<const Element> env);

/// A homomorphism.  For a free domain `images` lists the generator images;
/// for a finite domain it is the full table.
class Hom {
 public:
  Hom(ObjectPtr domain, ObjectPtr codomain, std::vector<Element> images);
  /// As the constructor, but for finite domains also checks that the table
  /// commutes with every operation (throws not-a-hom).
  static Hom checked(ObjectPtr domain, ObjectPtr codomain, std::vector<Element> images);
  static Hom identity(const ObjectPtr& obj);

  const ObjectPtr& domain() const { return domain_; }
  const ObjectPtr& codomain() const { return codomain_; }
  const std::vector<Element>& images() const { return images_; }

  Element operator()(const Element& e) const;

 private:
  ObjectPtr domain_;
  ObjectPtr codomain_;
  std::vector<Element> images_;
};

/// g ∘ f.
Hom compose(const Hom& g, const Hom& f);

struct HomComparison {
  bool equal = true;
  std::optional<Element> witness;  // generator or element where they differ
  Element left;
  Element right;
};

/// Homs out of a free object are compared on generators, homs out of a
/// finite object pointwise.
HomComparison hom_equal(const Hom& f, const Hom& g);

/// A chosen coproduct of `factors` with its injections.
class Coproduct {
 public:
  const ObjectPtr& object() const { return object_; }
  const std::vector<ObjectPtr>& factors() const { return factors_; }
  const std::vector<Hom>& injections() const { return injections_; }
  const Hom& injection(std::size_t k) const { return injections_.at(k); }
  std::size_t arity() const { return factors_.size(); }

  /// For a finite coproduct: each element as a term over the variables
  /// offset(k) + a + 1 standing for ν_k(a).  Computed on first use.
  const std::vector<Term>& decomposition() const;
  std::size_t offset(std::size_t k) const { return offsets_.at(k); }

  friend Coproduct coproduct(const BackendPtr& backend, std::vector<ObjectPtr> objects, bool finite_when_empty);

 private:
  ObjectPtr object_;
  std::vector<ObjectPtr> factors_;
  std::vector<Hom> injections_;
  std::vector<std::size_t> offsets_;
  struct Lazy;
  std::shared_ptr<Lazy> lazy_;
};

/// Free objects: FreeOn of the tagged disjoint union of generators.  Finite
/// objects: the backend's finite coproduct (capability-unsupported otherwise).
/// A one-fold coproduct is the object itself with the identity injection.
/// The empty coproduct is the initial object, finite when `finite_when_empty`.
Coproduct coproduct(const BackendPtr& backend, std::vector<ObjectPtr> objects, bool finite_when_empty = false);
Coproduct copower(const ObjectPtr& obj, std::size_t n);

/// [f_1, .., f_n] : ⨿ A_k -> B.  `codomain` fixes B when `homs` is empty.
Hom copair(const Coproduct& cp, std::span<const Hom> homs, const ObjectPtr& codomain);

/// f_1 + .. + f_n : ⨿ A_k -> ⨿ B_k, i.e. [ν_k ∘ f_k].
Hom coproduct_of_homs(const Coproduct& source, const Coproduct& target, std::span<const Hom> homs);

}  // namespace coalg
