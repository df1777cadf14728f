#include "coalg/backends/registry.hpp"

#include "coalg/error.hpp"

namespace coalg {

std::vector<std::string> registry_names() {
  return {"Set", "SetPt", "Mon", "Grp", "cMon", "cSem", "Ab", "cRing", "Mod(R)", "cAlg(R)"};
}

BackendPtr backend_by_name(const std::string& name, const RingResolver& rings) {
  if (name == "Set") return set_backend();
  if (name == "SetPt") return pointed_set_backend();
  if (name == "Mon") return monoid_backend();
  if (name == "Grp") return group_backend();
  if (name == "cMon") return comm_monoid_backend();
  if (name == "cSem") return comm_semigroup_backend();
  if (name == "Ab") return abelian_group_backend();
  if (name == "cRing") return comm_ring_backend();
  auto param = [&](const std::string& prefix) -> RingPtr {
    if (name.size() <= prefix.size() + 2 || name.compare(0, prefix.size() + 1, prefix + "(") != 0 || name.back() != ')')
      return nullptr;
    const auto ring = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    if (!rings) throw Error("unknown-ring", "no ring resolver for '" + ring + "'");
    auto r = rings(ring);
    if (!r) throw Error("unknown-ring", "unknown ring '" + ring + "'");
    return r;
  };
  if (auto r = param("Mod")) return module_backend(r);
  if (auto r = param("cAlg")) return comm_algebra_backend(r);
  throw Error("unknown-backend", "no built-in variety named '" + name + "'");
}

}  // namespace coalg
