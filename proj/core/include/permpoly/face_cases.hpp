#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/group.hpp"

namespace permpoly {

/// A group together with the vertex set of one of its faces, built from an
/// explicit recipe, and the reference type the face should have.
struct FaceCase {
  std::string name;
  PermutationGroup group;
  std::vector<Permutation> subset;  // S with F = F(S); empty for pair faces
  std::vector<std::size_t> face;    // vertex indices in G
  std::string target;               // reference_lattice expression
  std::size_t expected_order;
  std::size_t expected_dim;
};

/// dual_W, P, wedge_octahedron_facet, hypersimplex, octahedron,
/// bipyramid_cube, pyramid_octahedron, prism_octahedron, crosspolytope4.
const std::vector<std::string>& face_case_names();

/// Throws UnknownName.
FaceCase build_face_case(std::string_view name);

/// Alternative reading of the wedge recipe: S = {e, v1, v2, v3, v4}.
FaceCase wedge_octahedron_facet_with_v3();

struct FaceCaseResult {
  std::string name;
  std::size_t order = 0;
  std::size_t expected_order = 0;
  std::size_t face_vertices = 0;
  std::size_t dim = 0;
  std::size_t expected_dim = 0;
  std::vector<std::size_t> f_vector;
  std::vector<std::size_t> target_f_vector;
  bool is_face = false;     // LP check of F inside P(G)
  bool isomorphic = false;  // face lattice of F vs target
  bool pass = false;
  double seconds = 0;
};

/// Builds the hull of F (not of P(G)), compares to the target and checks
/// with an exact LP that F is a face of P(G).
FaceCaseResult verify_face_case(const FaceCase& c);

}  // namespace permpoly
