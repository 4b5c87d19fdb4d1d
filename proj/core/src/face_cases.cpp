#include "permpoly/face_cases.hpp"

#include <chrono>

#include "permpoly/constructions.hpp"
#include "permpoly/error.hpp"
#include "permpoly/face_lattice.hpp"
#include "permpoly/lattice_isomorphism.hpp"
#include "permpoly/perm_polytope.hpp"
#include "permpoly/reference.hpp"

namespace permpoly {

namespace {

// Block k (0-based) of consecutive 3-cycles: (3k+1 3k+2 3k+3).
Permutation three_cycle(std::size_t k, std::size_t degree) {
  return from_cycles({Cycle{{static_cast<Point>(3 * k), static_cast<Point>(3 * k + 1), static_cast<Point>(3 * k + 2)}}},
                     degree);
}

// Involution exchanging blocks j and k pointwise: (3j+1 3k+1)(3j+2 3k+2)(3j+3 3k+3).
Permutation exchange(std::size_t j, std::size_t k, std::size_t degree) {
  std::vector<Cycle> cycles;
  for (std::size_t x = 0; x < 3; ++x) cycles.push_back(Cycle{{static_cast<Point>(3 * j + x), static_cast<Point>(3 * k + x)}});
  return from_cycles(cycles, degree);
}

Permutation product(std::initializer_list<Permutation> ps, std::size_t degree) {
  Permutation r(degree);
  for (const auto& p : ps) r = r * p;
  return r;
}

FaceCase from_subset(std::string name, PermutationGroup g, std::vector<Permutation> s, std::string target,
                     std::size_t order, std::size_t dim) {
  FaceCase c{std::move(name), std::move(g), std::move(s), {}, std::move(target), order, dim};
  c.face = face_from_subset(c.group, c.subset);
  return c;
}

// a1, a2, b1, b2, c1, c2 in S18; v4 differs between the two cases.
FaceCase p_like(std::string name, bool use_e2, bool with_v3, std::string target) {
  const std::size_t n = 18;
  auto a = [&](std::size_t k) { return three_cycle(k, n); };
  const auto a1 = a(0), a2 = a(1), b1 = a(2), b2 = a(3), c1 = a(4), c2 = a(5);
  const auto e1 = exchange(2, 3, n), e2 = exchange(4, 5, n);
  const auto v1 = product({a1, a2}, n);
  const auto v2 = product({b1, b2, c1, c2}, n);
  const auto v3 = product({a1, b1, b2}, n);
  const auto v4 = use_e2 ? product({e1, e2}, n) : e1;
  auto g = PermutationGroup::generate({v1, v2, v3, v4}, n);
  std::vector<Permutation> s{Permutation(n), v1, v2};
  if (with_v3) s.push_back(v3);
  s.push_back(v4);
  return from_subset(std::move(name), std::move(g), std::move(s), std::move(target), 54, 4);
}

FaceCase dual_w_case() {
  const std::size_t n = 24;
  auto a = [&](std::size_t k) { return three_cycle(k, n); };  // a1..a4 = blocks 0..3, b1..b4 = 4..7
  const auto v1 = product({a(0), a(1), a(2), a(3)}, n);
  const auto v2 = product({a(4), a(5), a(6), a(7)}, n);
  const auto e1 = exchange(0, 1, n), e2 = exchange(4, 5, n);
  const auto d1 = exchange(2, 3, n), d2 = exchange(6, 7, n);
  const auto v3 = product({d1, d2}, n);
  const auto v4 = product({e1, e2}, n);
  auto g = PermutationGroup::generate({v1, v2, v3, v4}, n);
  return from_subset("dual_W", std::move(g), {Permutation(n), v1, v2, v3, v4}, "dual_W", 36, 4);
}

FaceCase hypersimplex_case() {
  const std::size_t n = 15;
  auto a = [&](std::size_t k) { return three_cycle(k, n); };
  const auto v1 = product({a(0), a(1)}, n);
  const auto v2 = product({a(2), a(3)}, n);
  const auto v3 = product({a(0), a(2)}, n);
  const auto v4 = product({a(0), a(4)}, n);
  auto g = PermutationGroup::generate({v1, v2, v3, v4}, n);
  return from_subset("hypersimplex", std::move(g), {Permutation(n), v1, v2, v4}, "pyramid(hypersimplex(5,2))",
                     81, 5);
}

FaceCase constr_case(std::string name, std::size_t l, std::size_t d, std::string target, std::size_t order) {
  auto c = constr_face(l, d);
  FaceCase fc{std::move(name), std::move(c.group), {}, std::move(c.face), std::move(target), order, l + d};
  return fc;
}

FaceCase pyramid_octahedron_case() {
  const auto oct = constr_face(1, 2);
  const auto pg = pyramid_group(oct.group);
  const std::size_t n = oct.group.degree();
  // S = {(e,e), (g1,g1), p}: F(S) is the pyramid over diag(F_{g1}).
  const Permutation e(n);
  std::vector<Permutation> s;
  for (const auto& x : {e, oct.g}) {
    std::vector<Point> images(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = x(static_cast<Point>(i));
      images[n + i] = static_cast<Point>(n + x(static_cast<Point>(i)));
    }
    s.push_back(Permutation::from_images(std::move(images)));
  }
  s.push_back(pg.apex);
  return from_subset("pyramid_octahedron", pg.group, std::move(s), "pyramid(octahedron)", 54, 4);
}

FaceCase prism_octahedron_case() {
  const auto oct = constr_face(1, 2);
  const auto seg = PermutationGroup::generate({parse_cycles("(1 2)", 2)}, 2);
  auto g = embed_product(oct.group, seg, EmbedMode::Disjoint);
  const std::size_t n = g.degree();
  const auto g1t = shift(oct.g, 0, n) * shift(seg.generators().front(), oct.group.degree(), n);
  return from_subset("prism_octahedron", std::move(g), {Permutation(n), g1t}, "prism(octahedron)", 54, 4);
}

FaceCase crosspolytope4_case() {
  auto g = PermutationGroup::generate(
      {parse_cycles("(1 2)(3 4)", 8), parse_cycles("(3 4)(7 8)", 8), parse_cycles("(5 6)(7 8)", 8)}, 8);
  FaceCase c{"crosspolytope4", g, g.elements(), {}, "crosspolytope(4)", 8, 4};
  for (std::size_t i = 0; i < g.order(); ++i) c.face.push_back(i);
  return c;
}

}  // namespace

const std::vector<std::string>& face_case_names() {
  static const std::vector<std::string> names = {
      "dual_W",       "P",          "wedge_octahedron_facet", "hypersimplex",  "octahedron",
      "bipyramid_cube", "pyramid_octahedron", "prism_octahedron", "crosspolytope4"};
  return names;
}

FaceCase build_face_case(std::string_view name) {
  if (name == "dual_W") return dual_w_case();
  if (name == "P") return p_like("P", true, false, "table2(P)");
  if (name == "wedge_octahedron_facet") return p_like("wedge_octahedron_facet", false, false, "wedge_octahedron_facet");
  if (name == "hypersimplex") return hypersimplex_case();
  if (name == "octahedron") return constr_case("octahedron", 1, 2, "octahedron", 27);
  if (name == "bipyramid_cube") return constr_case("bipyramid_cube", 1, 3, "bipyramid(cube)", 81);
  if (name == "pyramid_octahedron") return pyramid_octahedron_case();
  if (name == "prism_octahedron") return prism_octahedron_case();
  if (name == "crosspolytope4") return crosspolytope4_case();
  throw Error(ErrorCode::UnknownName, "unknown face case '" + std::string(name) + "'");
}

FaceCase wedge_octahedron_facet_with_v3() {
  return p_like("wedge_octahedron_facet", false, true, "wedge_octahedron_facet");
}

FaceCaseResult verify_face_case(const FaceCase& c) {
  const auto t0 = std::chrono::steady_clock::now();
  FaceCaseResult r;
  r.name = c.name;
  r.order = c.group.order();
  r.expected_order = c.expected_order;
  r.expected_dim = c.expected_dim;
  r.face_vertices = c.face.size();

  std::vector<Permutation> members;
  for (auto i : c.face) members.push_back(c.group.element(i));
  const VPolytope face(permutation_matrix_rows(members, c.group.degree()));
  r.dim = face.dim();
  const auto lattice = face_lattice(face);
  const auto target = reference_lattice(c.target);
  r.f_vector = lattice.f_vector();
  r.target_f_vector = target.f_vector();
  r.isomorphic = combinatorially_isomorphic(lattice, target).has_value();
  r.is_face = is_face(build(c.group).vpoly, c.face);
  r.pass = r.isomorphic && r.is_face && r.order == r.expected_order && r.dim == r.expected_dim;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace permpoly
