#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "permpoly/group.hpp"

namespace permpoly {

inline constexpr std::size_t kDefaultIsomorphismCap = 256;

/// A bijective homomorphism, stored as element-index images:
/// image[i] is the index in the target of the image of source element i.
struct GroupIsomorphism {
  std::vector<std::size_t> image;

  friend bool operator==(const GroupIsomorphism&, const GroupIsomorphism&) = default;
};

/// Calls `visit` once for every isomorphism G1 -> G2, in a fixed order
/// (backtracking over images of a reduced generating set of G1, candidates
/// in canonical element order of G2, pruned by element orders). Stops early
/// when `visit` returns false. Returns the number of isomorphisms visited.
///
/// Throws CapExceeded when |G1| > cap. Groups of different order have none.
std::size_t for_each_isomorphism(const PermutationGroup& g1, const PermutationGroup& g2,
                                 const std::function<bool(const GroupIsomorphism&)>& visit,
                                 std::size_t cap = kDefaultIsomorphismCap);

std::vector<GroupIsomorphism> isomorphisms(const PermutationGroup& g1, const PermutationGroup& g2,
                                           std::size_t cap = kDefaultIsomorphismCap);

bool are_isomorphic(const PermutationGroup& g1, const PermutationGroup& g2,
                    std::size_t cap = kDefaultIsomorphismCap);

}  // namespace permpoly
