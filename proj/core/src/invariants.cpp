#include "permpoly/invariants.hpp"

#include <algorithm>
#include <set>

#include "permpoly/double_description.hpp"
#include "permpoly/face_lattice.hpp"
#include "permpoly/perm_polytope.hpp"
#include "permpoly/representation.hpp"

namespace permpoly {

InvariantReport check_invariants(const PermutationGroup& group) {
  InvariantReport out;
  auto record = [&](std::string name, bool pass, std::string detail = {}) {
    out.pass = out.pass && pass;
    out.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const auto p = build(group);
  const std::size_t m = group.order(), d = p.dim(), n = group.degree();

  record("vertex_count", p.vpoly.num_vertices() == m && p.vpoly.vertices_irredundant());

  const auto edges = edge_graph(group);
  bool degrees = edges.regular;
  std::string detail = "degree " + std::to_string(edges.degree);
  if (m <= kDefaultVertexCap && d <= kDefaultDimCap) {
    const auto deg = face_lattice(p.vpoly).vertex_degrees();
    degrees = degrees && std::all_of(deg.begin(), deg.end(), [&](std::size_t x) { return x == edges.degree; });
  } else {
    detail += " (edge graph only)";
  }
  record("equal_vertex_degrees", degrees, detail);

  const bool lower = d < 64 && (std::size_t{1} << d) >= m;
  record("dimension_bounds", (lower || d >= 64) && d + 1 <= m, "dim " + std::to_string(d));
  record("origin_outside_affine_hull", !origin_in_affine_hull(p));
  record("kernel_dimension", affine_kernel(group).dim() + d + 1 == m);

  bool symmetric = true;
  for (std::size_t a = 0; a < m && symmetric; ++a) {
    for (std::size_t b = a; b < m && symmetric; ++b) {
      const auto& g = group.element(a);
      const auto& h = group.element(b);
      const auto face = smallest_face_pair(group, g, h);
      std::set<std::size_t> members(face.begin(), face.end());
      // Closed under the antipode map, and the vertex sum is |F| (g+h)/2.
      std::vector<long> sum(n * n, 0);
      for (auto v : face) {
        const auto& x = group.element(v);
        if (!members.count(group.index_or_throw(pair_antipode(g, h, x)))) symmetric = false;
        for (std::size_t j = 0; j < n; ++j) sum[x(static_cast<Point>(j)) * n + j] += 2;
      }
      std::vector<long> target(n * n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        target[g(static_cast<Point>(j)) * n + j] += static_cast<long>(face.size());
        target[h(static_cast<Point>(j)) * n + j] += static_cast<long>(face.size());
      }
      if (sum != target) symmetric = false;
    }
  }
  record("pair_faces_centrally_symmetric", symmetric);

  bool agree = true;
  for (std::size_t i = 0; i < m && agree; ++i) {
    const auto& g = group.element(i);
    std::vector<std::size_t> sub;
    for (const auto& s : subelements(g, group)) sub.push_back(group.index_or_throw(s.element));
    std::sort(sub.begin(), sub.end());
    agree = sub == face_from_subset(group, {group.identity(), g}) &&
            sub == smallest_face_pair(group, group.identity(), g);
  }
  record("subelements_three_way", agree);
  return out;
}

}  // namespace permpoly
