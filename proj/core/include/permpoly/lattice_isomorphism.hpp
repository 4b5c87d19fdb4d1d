#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "permpoly/face_lattice.hpp"

namespace permpoly {

/// vertex_map[v] is the image of vertex v; facet_map[f] the image of
/// facets()[f]. v lies in facet f iff vertex_map[v] lies in facet_map[f].
struct LatticeIsomorphism {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> facet_map;
};

/// Calls `visit` for every isomorphism a -> b in a fixed order; stops when
/// it returns false. Returns the number of isomorphisms visited.
std::size_t for_each_combinatorial_isomorphism(
    const FaceLattice& a, const FaceLattice& b,
    const std::function<bool(const LatticeIsomorphism&)>& visit);

std::optional<LatticeIsomorphism> combinatorially_isomorphic(const FaceLattice& a,
                                                             const FaceLattice& b);

}  // namespace permpoly
