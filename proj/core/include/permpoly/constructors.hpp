#pragma once

#include "permpoly/face_lattice.hpp"

namespace permpoly {

// Combinatorial constructions on face lattices. Vertex numbering of the
// result is documented per function.

/// Vertices (i, j) numbered i * |V(b)| + j.
FaceLattice product(const FaceLattice& a, const FaceLattice& b);

/// Vertices of a, then the apex.
FaceLattice pyramid(const FaceLattice& a);

/// Vertices of a, then those of b. Both must have dimension >= 1.
FaceLattice free_sum(const FaceLattice& a, const FaceLattice& b);

/// product(a, segment).
FaceLattice prism(const FaceLattice& a);

/// free_sum(a, segment).
FaceLattice bipyramid(const FaceLattice& a);

/// Wedge over a proper face F: the prism over a with F x [0,1] collapsed
/// to F. Vertices: those of a (bottom), then top copies of V \ F in index
/// order. Throws InvalidFace if F is not a proper face.
FaceLattice wedge(const FaceLattice& a, const VertexSet& face);

/// Vertices of the dual are the facets of a, in a.facets() order.
FaceLattice dual(const FaceLattice& a);

}  // namespace permpoly
