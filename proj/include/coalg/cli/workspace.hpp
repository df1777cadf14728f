#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coalg/algebra/finite_algebra.hpp"
#include "coalg/backends/backend.hpp"
#include "coalg/bimodule/module.hpp"
#include "coalg/coalgebra/coalgebra.hpp"
#include "coalg/hopf/bialgebra.hpp"
#include "coalg/theory/morphism.hpp"

namespace coalg {

struct WorkspaceAlgebra {
  std::string theory;
  FiniteAlgebra algebra;
  std::vector<std::string> labels;
};

/// Everything a set of DSL files defines, keyed by name within each kind.
/// Builtin rings, variety presentations and stored bialgebras resolve
/// without being declared.
class Workspace {
 public:
  std::vector<std::string> sources;
  std::map<std::string, TheoryPresentation> theories;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, WorkspaceAlgebra> algebras;
  std::map<std::string, TheoryMorphism> morphisms;
  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, FiniteModule> modules;
  std::map<std::string, Bimodule> bimodules;
  std::map<std::string, FiniteBialgebra> bialgebras;

  /// Declared ring, else a builtin (Z<n>, F2, F2eps, UT2F2).
  RingPtr ring(const std::string& name) const;
  /// Variety backend by registry name, e.g. `Grp`, `Mod(Z4)`, `cAlg(Z2)`.
  BackendPtr backend(const std::string& name) const;
  /// Declared theory, else the presentation of the named variety.
  TheoryPresentation theory(const std::string& name) const;
  /// Declared bialgebra, else a stored one.
  FiniteBialgebra bialgebra(const std::string& name) const;
  ObjectPtr algebra_object(const std::string& name) const;

  /// Kinds under which `name` is defined ("theory", "algebra", ...).
  std::vector<std::string> kinds_of(const std::string& name) const;

  /// Parses one DSL text into the workspace.  Throws syntax / duplicate-name
  /// / unknown-name errors prefixed with `source`.
  void load_text(const std::string& text, const std::string& source);
  void load_file(const std::string& path);

 private:
  mutable std::map<std::string, BackendPtr> backend_cache_;
};

/// The objects of the worked examples, always loaded before user files.
const std::string& prelude_text();

Workspace load_workspace(const std::vector<std::string>& files, bool with_prelude = true);

}  // namespace coalg
