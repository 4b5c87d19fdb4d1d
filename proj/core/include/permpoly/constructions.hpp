#pragma once

#include <cstddef>
#include <vector>

#include "permpoly/face_lattice.hpp"
#include "permpoly/group.hpp"
#include "permpoly/polytope.hpp"

namespace permpoly {

/// <(1 2), (3 4), ..., (2d-1 2d)>, whose polytope is the d-cube.
PermutationGroup cube_group(std::size_t d);

/// The group on 2d points generated by z_1...z_d and, for each bit i of the
/// column index, the product of the z_{j+1} with bit i of j set.
/// Throws NotAPowerOfTwo unless d is a power of two.
PermutationGroup crosspolytope_group(std::size_t d);

/// Generators of crosspolytope_group, in the order described above.
std::vector<Permutation> crosspolytope_generators(std::size_t d);

struct ConstrFace {
  PermutationGroup group;
  Permutation g;                  // g_l
  std::vector<std::size_t> face;  // smallest face containing e and g_l
};

/// The tower built from d disjoint 3-cycles by l doubling steps
/// (H_i = diagonal, p_i = (g_{i-1}, e)). For d = 0 the crosspolytope is
/// split as (l-1)-crosspolytope plus segment, i.e. (l-1, 1) is built.
/// Throws InvalidArgument for l = d = 0 and CapExceeded for large inputs.
ConstrFace constr_face(std::size_t l, std::size_t d);

struct ProductDecomposition {
  PermutationGroup h1, h2;      // same degree as G
  std::vector<Point> part1, part2;
};

/// Pairs (H1, H2) with H_i the elements supported on a union of orbits,
/// over all bipartitions of the non-trivial orbits, kept when
/// |H1| |H2| = |G| and both are nontrivial. Unordered: part1 holds the
/// smallest moved point.
std::vector<ProductDecomposition> product_decompositions(const PermutationGroup& group);

struct SimpleCheck {
  std::size_t indecomposables = 0;
  std::size_t dim = 0;
  bool applies = false;  // indecomposables == dim
  std::vector<PermutationGroup> factors;
  bool factors_regular = false;  // every factor has a simplex polytope
};

/// When G has exactly dim P(G) indecomposable elements, splits G into
/// factors with disjoint supports and checks each is stably regular.
SimpleCheck simple_polytope_check(const PermutationGroup& group);

struct SubgroupFaceResult {
  bool is_face = false;
  bool equals_orbit_stabilizer = false;
};

/// Throws NotASubgroup.
SubgroupFaceResult subgroup_face_test(const PermutationGroup& group, const PermutationGroup& sub);

/// Facets (indices into the lattice's facet list) whose complementary vertex
/// set is not a face.
std::vector<std::size_t> facet_complement_failures(const FaceLattice& lattice);
/// Geometric variant: complements tested with is_face on the hull.
std::vector<std::size_t> facet_complement_failures(const VPolytope& p, const FaceLattice& lattice);

}  // namespace permpoly
