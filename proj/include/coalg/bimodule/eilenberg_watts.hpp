#pragma once

#include <string>
#include <vector>

#include "coalg/bimodule/tensor.hpp"

namespace coalg {

/// Outcome of matching two enumerated hom-sets along an explicit map.
struct BijectionCheck {
  bool ok = true;
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::string failure;
};

struct AdjunctionReport {
  BijectionCheck bijection;
  std::size_t naturality_squares = 0;
  bool natural = true;
  std::string failure;
  bool ok() const { return bijection.ok && natural; }
};

/// Hom_S(M ⊗_R X, Y) ≅ Hom_R(X, Hom_S(M, Y)) via f ↦ (x ↦ (m ↦ f(m ⊗ x))),
/// with naturality checked against every hom X' -> X for X' in `sources`
/// and every hom Y -> Y' for Y' in `targets`.
AdjunctionReport check_tensor_hom_adjunction(const Bimodule& m, const FiniteModule& x, const FiniteModule& y,
                                             const std::vector<FiniteModule>& sources = {},
                                             const std::vector<FiniteModule>& targets = {});

struct LeftAdjointResult {
  FiniteModule module;
  std::size_t kernel_pairs = 0;  // pairs of K_A fed into the coequalizer
  bool literal_kernel_pair = true;
};

/// L(A) as the coequalizer of |K_A|·M ⇉ |A|·M, where F|A| = R^(A) and K_A is
/// the kernel pair of the counit F|A| -> A.  K_A is listed in full when
/// |R|^|A| <= 4096; up to 65536 the pairs (w, 0) with w in the kernel are
/// used, which generate the same relations.
LeftAdjointResult left_adjoint_via_presentation(const Bimodule& m, const FiniteModule& a);

/// S as an (S, R)-bimodule through f: s·t·r = s t f(r).
Bimodule extension_bimodule(const RingHom& f);
/// S as an (R, S)-bimodule through f: r·t·s = f(r) t s.
Bimodule coextension_bimodule(const RingHom& f);
FiniteModule restriction(const RingHom& f, const FiniteModule& n);

struct ChangeOfRingsReport {
  std::vector<std::string> lines;
  bool ok = true;
  std::size_t bijections = 0;
};

/// Restriction, extension S ⊗_R − and coextension Hom_R(S, −) along f, with
/// both adjunction bijections checked on every pair of test modules.
ChangeOfRingsReport change_of_rings(const RingHom& f, const std::vector<FiniteModule>& r_modules,
                                    const std::vector<FiniteModule>& s_modules);

/// Ab(|R|, |N|) with (s·φ)(r) = s·φ(r) and (φ·r)(r') = φ(r r').
struct CofreeBimodule {
  std::vector<Table> maps;
  Bimodule bimodule;
  Table counit;  // φ ↦ φ(1)
};

CofreeBimodule cofree_bimodule(const RingPtr& s, const RingPtr& r, const FiniteModule& n);

/// Bimod(M, C(N)) ≅ Hom_S(|M|, N) by composing with the counit.
BijectionCheck check_cofree_couniversal(const CofreeBimodule& c, const FiniteModule& n, const Bimodule& m);

/// Bimod(F(M), P) ≅ Hom_S(M, |P|) by composing with the unit.
BijectionCheck check_free_universal(const FreeBimodule& f, const FiniteModule& m, const Bimodule& p);

}  // namespace coalg
