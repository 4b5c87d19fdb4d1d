#pragma once

#include <string>
#include <vector>

#include "permpoly/group.hpp"

namespace permpoly {

struct InvariantCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;
  bool pass = true;
};

/// Structural properties every permutation polytope has: |G| vertices,
/// constant vertex degree, log2|G| <= dim <= |G| - 1, 0 outside the affine
/// hull, dim ker = |G| - 1 - dim, centrally symmetric pair faces centred at
/// (g+h)/2, and subelements(g) = F({e,g}) = smallest face of e and g.
InvariantReport check_invariants(const PermutationGroup& group);

}  // namespace permpoly
