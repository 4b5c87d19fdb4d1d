#pragma once

#include <cstddef>
#include <vector>

#include "permpoly/matrix.hpp"
#include "permpoly/vertex_set.hpp"

namespace permpoly {

class VPolytope;

inline constexpr std::size_t kDefaultVertexCap = 200;
inline constexpr std::size_t kDefaultDimCap = 12;

/// offset + normal . x_J >= 0, where x_J are the projected (untranslated)
/// coordinates of the polytope. (offset, normal) is a primitive integer
/// vector.
struct Facet {
  Integer offset;
  IntVector normal;
  VertexSet vertices;
};

struct HRepresentation {
  std::size_t dim = 0;
  std::vector<std::size_t> columns;  // J
  std::vector<Facet> facets;         // sorted by (offset, normal)
};

/// Irredundant facet description by incremental double description on the
/// homogenized cone, inserting vertices in index order. Throws CapExceeded.
HRepresentation facet_enumeration(const VPolytope& p, std::size_t vertex_cap = kDefaultVertexCap,
                                  std::size_t dim_cap = kDefaultDimCap);

}  // namespace permpoly
