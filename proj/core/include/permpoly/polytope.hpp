#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "permpoly/matrix.hpp"
#include "permpoly/vertex_set.hpp"

namespace permpoly {

/// Affine coordinates of a point set, obtained by keeping the pivot
/// coordinates J of the reduced row echelon form of the difference matrix.
/// The projection x -> x_J is injective on the affine hull, keeps all affine
/// dependencies, and J depends only on the affine hull (not on point order).
struct AffineProjection {
  std::size_t dim = 0;
  std::vector<std::size_t> columns;  // J, ascending
  RatVector origin;                  // first point, ambient coordinates
  RatMatrix coords;                  // rows: x_J - origin_J
  RatMatrix raw;                     // rows: x_J
};

AffineProjection affine_project(const RatMatrix& points);

/// Convex hull of a finite point set, stored by its vertices.
class VPolytope {
 public:
  VPolytope() = default;

  /// The rows are taken as the vertex list; they must be distinct vertices
  /// of their hull (check with vertices_irredundant()).
  explicit VPolytope(RatMatrix vertices);

  /// Drops duplicate rows and rows that are not vertices of the hull.
  static VPolytope hull(const RatMatrix& points);

  const RatMatrix& vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.rows(); }
  std::size_t ambient_dim() const noexcept { return vertices_.cols(); }
  std::size_t dim() const noexcept { return proj_.dim; }
  const AffineProjection& projection() const noexcept { return proj_; }

  /// Every stored point is exposed alone by some functional.
  bool vertices_irredundant() const;

 private:
  RatMatrix vertices_;
  AffineProjection proj_;
};

/// True iff some functional is maximized on the hull exactly at `subset`.
/// The empty set and the full vertex set count as faces.
bool is_face(const VPolytope& p, const VertexSet& subset);
bool is_face(const VPolytope& p, const std::vector<std::size_t>& subset);

/// Center c with the vertex set invariant under x -> 2c - x, if any.
std::optional<RatVector> is_centrally_symmetric(const VPolytope& p);

/// Affine isomorphism between the hulls, in projected coordinates:
/// linear * p.coords(i) + translation = q.coords(vertex_map[i]).
struct AffineMap {
  std::vector<std::size_t> vertex_map;
  RatMatrix linear;
  RatVector translation;
};

std::optional<AffineMap> affinely_equivalent(const VPolytope& p, const VPolytope& q);

/// Elementary divisors of the difference lattice inside the saturated
/// lattice (affine span intersected with Z^N). index == 1 iff the points
/// form an affine lattice basis of that lattice.
struct LatticeIndex {
  IntVector divisors;  // nonzero ones, ascending divisibility chain
  Integer index;
};

LatticeIndex lattice_index(const IntMatrix& points);

}  // namespace permpoly
