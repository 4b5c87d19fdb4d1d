#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/face_lattice.hpp"
#include "permpoly/polytope.hpp"

namespace permpoly {

/// Catalog of named polytopes. Names are expressions:
///
///   point, segment, triangle, square, tetrahedron, cube, octahedron,
///   square_pyramid, triangular_prism, wedge_W, dual_W, wedge_octahedron_facet,
///   simplex(d), cube(d), crosspolytope(d), hypersimplex(n,k), birkhoff(n),
///   table2(P), table2(Q1), table2(Q2),
///   pyramid(X), prism(X), bipyramid(X), dual(X), product(X,Y), free_sum(X,Y)
///
/// Throws UnknownName (or SyntaxError for malformed expressions).
FaceLattice reference_lattice(std::string_view name);

/// Canonical 0/1 (or +-1) coordinates where the catalog has them; nullopt
/// for names defined only combinatorially. Throws UnknownName.
std::optional<VPolytope> reference_vpolytope(std::string_view name);

/// One subtable of the shipped vertex-facet incidence data.
struct Table2Entry {
  std::string name;                                // P, Q1, Q2
  std::vector<std::size_t> expected_f_vector;
  std::size_t num_vertices;
  std::vector<std::vector<std::size_t>> facets;    // verbatim, 0-based
};

const std::vector<Table2Entry>& table2_entries();

}  // namespace permpoly
