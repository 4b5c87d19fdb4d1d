#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "permpoly/vertex_set.hpp"

namespace permpoly {

class VPolytope;

/// Face lattice of a polytope, determined by its vertex-facet incidences.
/// Faces are vertex sets; their dimension is the combinatorial rank
/// (length of a longest chain from the empty face, minus one).
class FaceLattice {
 public:
  struct Face {
    int dim;
    VertexSet vertices;
  };

  FaceLattice() = default;

  /// Facets are sorted and deduplicated. A 0-dimensional polytope has the
  /// single facet {}. Throws InvalidArgument if one facet contains another
  /// or an index is out of range.
  static FaceLattice from_facets(std::size_t num_vertices, std::vector<VertexSet> facets);
  static FaceLattice from_facets(std::size_t num_vertices,
                                 const std::vector<std::vector<std::size_t>>& facets);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  int dim() const noexcept { return dim_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }

  /// All faces including {} and the whole polytope, ordered by dimension
  /// and then by vertex list.
  const std::vector<Face>& faces() const noexcept { return faces_; }
  std::vector<VertexSet> faces_of_dim(int d) const;

  /// (f_0, ..., f_{dim-1}).
  std::vector<std::size_t> f_vector() const;

  /// Edges at each vertex.
  std::vector<std::size_t> vertex_degrees() const;

  /// Facets containing each vertex.
  const std::vector<VertexSet>& vertex_facets() const noexcept { return vertex_facets_; }

  /// Smallest face containing `s`.
  VertexSet closure(const VertexSet& s) const;
  bool contains_face(const VertexSet& s) const { return face_dim(s).has_value(); }
  std::optional<int> face_dim(const VertexSet& s) const;

  /// sum (-1)^i f_i == 1 - (-1)^dim.
  bool euler_holds() const;

  /// The lattice of a face F, with vertices renumbered by rank in F.
  FaceLattice face_lattice_of(const VertexSet& face) const;

 private:
  std::size_t num_vertices_ = 0;
  int dim_ = -1;
  std::vector<VertexSet> facets_;
  std::vector<VertexSet> vertex_facets_;
  std::vector<Face> faces_;
  std::unordered_map<VertexSet, std::size_t> index_;
};

/// Facet enumeration followed by lattice construction.
FaceLattice face_lattice(const VPolytope& p);

}  // namespace permpoly
