#pragma once

#include <vector>

#include "coalg/bimodule/module.hpp"

namespace coalg {

/// One representative per isomorphism class of abelian groups of order n,
/// as lists of prime-power cyclic orders.
std::vector<std::vector<std::int64_t>> abelian_group_types(std::size_t n);

/// Every action table making `group` an R-module on the given side.
std::vector<std::vector<std::size_t>> module_actions(const RingPtr& ring, Side side, const FiniteAbelianGroup& group);

/// Left R-modules of size <= max_size, one per isomorphism class, ordered by
/// size and then by discovery.
std::vector<FiniteModule> modules_up_to_iso(const RingPtr& ring, std::size_t max_size, Side side = Side::Left);

/// (S, R)-bimodules of size <= max_size up to isomorphism.
std::vector<Bimodule> bimodules_up_to_iso(const RingPtr& s, const RingPtr& r, std::size_t max_size);

}  // namespace coalg
