#pragma once

#include <cstddef>
#include <optional>

#include "permpoly/face_lattice.hpp"
#include "permpoly/lattice_isomorphism.hpp"

namespace permpoly {

/// A lattice automorphism that is an involution without fixed vertices and
/// maps every facet to a disjoint one (a combinatorial central symmetry).
/// When `u` and `v` are given, the involution must also swap them.
std::optional<LatticeIsomorphism> combinatorial_central_symmetry(
    const FaceLattice& l, std::optional<std::pair<std::size_t, std::size_t>> swap = std::nullopt);

/// Every pair of distinct vertices spans a smallest face that is
/// combinatorially centrally symmetric with the pair antipodal.
bool smallface_filter(const FaceLattice& l);

/// A combinatorially centrally symmetric lattice survives only with 2^k
/// vertices; all other lattices survive.
bool vertex_count_power_of_two_filter(const FaceLattice& l);

}  // namespace permpoly
