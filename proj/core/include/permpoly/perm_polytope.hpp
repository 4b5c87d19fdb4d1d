#pragma once

#include <cstddef>
#include <vector>

#include "permpoly/group.hpp"
#include "permpoly/polytope.hpp"

namespace permpoly {

/// Row i is the permutation matrix of elements[i], flattened row-major:
/// entry (p(j), j) is 1, at index p(j) * n + j.
RatMatrix permutation_matrix_rows(const std::vector<Permutation>& elements, std::size_t degree);
IntMatrix permutation_matrix_rows_int(const std::vector<Permutation>& elements, std::size_t degree);

/// P(G) = conv of the permutation matrices of G. Vertex i is element i.
struct PermPolytope {
  PermutationGroup group;
  VPolytope vpoly;

  std::size_t dim() const { return vpoly.dim(); }
};

/// Throws CapExceeded when |G| exceeds `cap`.
PermPolytope build(const PermutationGroup& group, std::size_t cap = kDefaultElementCap);

/// Affine dimension of P(G).
std::size_t dimension(const PermutationGroup& group);

/// Whether the zero matrix lies in the affine hull of P(G) (decided by an
/// exact linear solve).
bool origin_in_affine_hull(const PermPolytope& p);

/// F(S): indices of the elements whose 1-entries all lie in the support of
/// the entrywise maximum of S. Throws NotAMember; S must be nonempty
/// (InvalidArgument).
std::vector<std::size_t> face_from_subset(const PermutationGroup& group,
                                          const std::vector<Permutation>& subset);

/// Vertex indices of the smallest face containing g and h, computed as
/// g * subelements(g^-1 h). Throws NotAMember.
std::vector<std::size_t> smallest_face_pair(const PermutationGroup& group, const Permutation& g,
                                            const Permutation& h);

/// Vertex opposite to v in the smallest face containing g and h:
/// g (g^-1 h) (g^-1 v)^-1 = h v^-1 g.
Permutation pair_antipode(const Permutation& g, const Permutation& h, const Permutation& v);

struct EdgeGraph {
  std::vector<std::vector<std::size_t>> adjacency;  // ascending
  std::size_t degree = 0;  // number of indecomposable elements
  bool regular = true;     // all vertices have that degree
};

/// g ~ h iff g^-1 h is indecomposable.
EdgeGraph edge_graph(const PermutationGroup& group);

}  // namespace permpoly
