#include "permpoly/perm_polytope.hpp"

#include <algorithm>
#include <variant>

#include "permpoly/error.hpp"
#include "permpoly/linalg.hpp"

namespace permpoly {

RatMatrix permutation_matrix_rows(const std::vector<Permutation>& elements, std::size_t degree) {
  RatMatrix m(elements.size(), degree * degree);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < degree; ++j) m(i, elements[i](static_cast<Point>(j)) * degree + j) = 1;
  }
  return m;
}

IntMatrix permutation_matrix_rows_int(const std::vector<Permutation>& elements, std::size_t degree) {
  IntMatrix m(elements.size(), degree * degree);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < degree; ++j) m(i, elements[i](static_cast<Point>(j)) * degree + j) = 1;
  }
  return m;
}

PermPolytope build(const PermutationGroup& group, std::size_t cap) {
  if (group.order() > cap) throw Error(ErrorCode::CapExceeded, "group too large for build");
  // Distinct 0/1 points on a sphere are always vertices of their hull.
  return PermPolytope{group, VPolytope(permutation_matrix_rows(group.elements(), group.degree()))};
}

std::size_t dimension(const PermutationGroup& group) { return build(group).dim(); }

bool origin_in_affine_hull(const PermPolytope& p) {
  // Solve sum_g l_g x_g = 0, sum_g l_g = 1.
  const auto& v = p.vpoly.vertices();
  RatMatrix m(v.cols() + 1, v.rows());
  RatVector b(v.cols() + 1);
  for (std::size_t g = 0; g < v.rows(); ++g) {
    for (std::size_t k = 0; k < v.cols(); ++k) m(k, g) = v(g, k);
    m(v.cols(), g) = 1;
  }
  b[v.cols()] = 1;
  return std::holds_alternative<RatVector>(solve(m, b));
}

std::vector<std::size_t> face_from_subset(const PermutationGroup& group,
                                          const std::vector<Permutation>& subset) {
  if (subset.empty()) throw Error(ErrorCode::InvalidArgument, "face_from_subset needs a nonempty set");
  const std::size_t n = group.degree();
  std::vector<bool> support(n * n, false);
  for (const auto& s : subset) {
    group.index_or_throw(s);
    for (std::size_t j = 0; j < n; ++j) support[s(static_cast<Point>(j)) * n + j] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto& g = group.element(i);
    bool inside = true;
    for (std::size_t j = 0; j < n && inside; ++j) inside = support[g(static_cast<Point>(j)) * n + j];
    if (inside) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> smallest_face_pair(const PermutationGroup& group, const Permutation& g,
                                            const Permutation& h) {
  group.index_or_throw(g);
  group.index_or_throw(h);
  std::vector<std::size_t> out;
  for (const auto& s : subelements(g.inverse() * h, group)) out.push_back(group.index_or_throw(g * s.element));
  std::sort(out.begin(), out.end());
  return out;
}

Permutation pair_antipode(const Permutation& g, const Permutation& h, const Permutation& v) {
  return h * v.inverse() * g;
}

EdgeGraph edge_graph(const PermutationGroup& group) {
  const std::size_t m = group.order();
  std::vector<bool> indecomposable(m, false);
  EdgeGraph out;
  for (std::size_t i = 1; i < m; ++i) {
    indecomposable[i] = subelements(group.element(i), group).size() == 2;
    if (indecomposable[i]) ++out.degree;
  }
  out.adjacency.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && indecomposable[group.multiply(group.inverse(a), b)]) out.adjacency[a].push_back(b);
    }
    if (out.adjacency[a].size() != out.degree) out.regular = false;
  }
  return out;
}

}  // namespace permpoly
