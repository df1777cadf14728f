#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coalg/backends/backend.hpp"
#include "coalg/bimodule/ring.hpp"

namespace coalg {

BackendPtr set_backend();
BackendPtr pointed_set_backend();
BackendPtr monoid_backend();
BackendPtr group_backend();
BackendPtr comm_monoid_backend();
BackendPtr comm_semigroup_backend();
BackendPtr abelian_group_backend();
BackendPtr comm_ring_backend();
/// Left R-modules; scalar multiplication by the ring element k is the unary op `s<k>`.
BackendPtr module_backend(const RingPtr& ring);
/// Commutative R-algebras for a finite commutative ring R.
BackendPtr comm_algebra_backend(const RingPtr& ring);

TheoryPresentation module_theory(const FiniteRing& ring);
TheoryPresentation comm_algebra_theory(const FiniteRing& ring);
std::string scalar_op(std::size_t r);

using RingResolver = std::function<RingPtr(const std::string&)>;

/// `Set`, `SetPt`, `Mon`, `Grp`, `cMon`, `cSem`, `Ab`, `cRing`, `Mod(R)`, `cAlg(R)`.
/// Ring names go through `rings`.  Throws unknown-backend.
BackendPtr backend_by_name(const std::string& name, const RingResolver& rings = {});

std::vector<std::string> registry_names();

}  // namespace coalg
