#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coalg/coalgebra/coalgebra.hpp"
#include "coalg/hopf/comm_algebra.hpp"
#include "coalg/theory/morphism.hpp"

namespace coalg {

/// A sum of pure tensors b_1⊗c_1 + .. + b_k⊗c_k.
using TensorSum = std::vector<std::pair<std::size_t, std::size_t>>;

struct LawCheck {
  std::string law;
  bool ok = true;
  std::string witness;
};

/// A finite commutative bialgebra: Δ : A -> A⊗A and ε : A -> R algebra maps,
/// optionally with an antipode.
class FiniteBialgebra {
 public:
  /// Δ, ε and the antipode are given on a generating set of the algebra and
  /// extended multiplicatively.  Coassociativity is compared in coordinates
  /// when `basis` is an R-basis of the algebra, otherwise in the materialized
  /// triple tensor (cap-exceeded beyond 4096 elements).  Throws
  /// not-a-bialgebra naming the first failed law.
  FiniteBialgebra(std::string name, CommAlgebra algebra, const std::map<std::size_t, TensorSum>& delta,
                  const std::map<std::size_t, std::size_t>& counit,
                  const std::optional<std::map<std::size_t, std::size_t>>& antipode = std::nullopt,
                  const std::optional<std::vector<std::size_t>>& basis = std::nullopt);

  const std::string& name() const { return name_; }
  const CommAlgebra& algebra() const { return algebra_; }
  const RingPtr& ring() const { return algebra_.ring(); }
  const AlgebraTensor& tensor() const { return *tensor_; }
  std::size_t size() const { return algebra_.size(); }

  std::size_t delta(std::size_t a) const { return delta_[a]; }
  std::size_t counit(std::size_t a) const { return counit_[a]; }
  const Table& delta_table() const { return delta_; }
  const Table& counit_table() const { return counit_; }
  const std::optional<Table>& antipode() const { return antipode_; }

  const std::vector<LawCheck>& laws() const { return laws_; }
  /// Δ(a) written as a sum of pure tensors.
  std::string show_delta(std::size_t a) const;

 private:
  std::string name_;
  CommAlgebra algebra_;
  std::shared_ptr<const AlgebraTensor> tensor_;
  Table delta_;
  Table counit_;
  std::optional<Table> antipode_;
  std::vector<LawCheck> laws_;
};

/// The algebra map determined by its values on `seeds`, if they generate
/// `a` and the assignment is consistent.
std::optional<Table> extend_algebra_map(const CommAlgebra& a, const CommAlgebra& b,
                                        const std::map<std::size_t, std::size_t>& seeds);

/// R[G] with Δg = g⊗g, εg = 1, ι(g) = g^-1.  `g` is a finite algebra over the
/// group signature (m, e, i); `names` label the group elements, by default
/// "1", "g1", "g2", ...
FiniteBialgebra group_algebra(const RingPtr& ring, const FiniteAlgebra& g, std::vector<std::string> names = {},
                              std::string name = "");

/// R[x]/(x^n) with x primitive and antipode x ↦ -x.  Only a bialgebra when
/// the characteristic makes (x⊗1 + 1⊗x)^n vanish.
FiniteBialgebra truncated_polynomial(const RingPtr& ring, std::size_t n, std::string var = "x", std::string name = "");

/// The cyclic group of order n over the group signature.
FiniteAlgebra cyclic_group(std::size_t n);

/// {a | Δa = a⊗a, εa = 1}, in carrier order.
std::vector<std::size_t> group_like(const FiniteBialgebra& h);
/// {a | Δa = a⊗1 + 1⊗a}, in carrier order.
std::vector<std::size_t> primitive(const FiniteBialgebra& h);

struct ClosureCheck {
  bool submonoid = true;   // group-likes: contain 1, closed under ·
  bool submodule = true;   // primitives: contain 0, closed under + and R-scaling
  std::string witness;
};

ClosureCheck check_closure(const FiniteBialgebra& h);

/// H as a coalgebra in cAlg(R): a comonoid (cotheory Mon) and a
/// cogroup-like structure in the additive direction (cotheory Ab with
/// antipode, cMon without).  The copowers are the backend's tensor powers.
struct BialgebraEncoding {
  Coalgebra multiplicative;   // m ↦ Δ, e ↦ ε
  TheoryMorphism psi;         // m ↦ times, e ↦ one
  Coalgebra additive;         // plus ↦ Δ, zero ↦ ε, neg ↦ ι
  TheoryMorphism phi;         // plus ↦ plus, zero ↦ zero, neg ↦ neg
};

BialgebraEncoding encode_bialgebra(const FiniteBialgebra& h);

struct ClassicalComparison {
  std::vector<std::size_t> group_like_classical;
  std::vector<std::size_t> group_like_abstract;
  std::vector<std::size_t> primitive_classical;
  std::vector<std::size_t> primitive_abstract;
  bool ok() const {
    return group_like_classical == group_like_abstract && primitive_classical == primitive_abstract;
  }
};

/// Throws cap-exceeded when |H| > max_carrier or |H⊗H| > max_tensor.
ClassicalComparison gphi_matches_classical(const FiniteBialgebra& h, std::size_t max_carrier = 9,
                                           std::size_t max_tensor = 81);

/// Named builtins: F2C2 = F2[C2], Z3C2, F2x2 = F2[x]/(x^2), ... (see stored_bialgebra_names).
FiniteBialgebra stored_bialgebra(const std::string& name);
std::vector<std::string> stored_bialgebra_names();


}  // namespace coalg
