#include "permpoly/polytope.hpp"

#include <algorithm>
#include <set>

#include "permpoly/double_description.hpp"
#include "permpoly/face_lattice.hpp"
#include "permpoly/lattice_isomorphism.hpp"
#include "permpoly/linalg.hpp"
#include "permpoly/lp.hpp"

namespace permpoly {

AffineProjection affine_project(const RatMatrix& points) {
  AffineProjection out;
  const std::size_t n = points.rows(), ambient = points.cols();
  if (n == 0) return out;
  RatMatrix diffs(n - 1, ambient);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < ambient; ++k) diffs(i - 1, k) = points(i, k) - points(0, k);
  }
  out.columns = rref(std::move(diffs)).pivots;
  out.dim = out.columns.size();
  out.origin = points.row_vector(0);
  out.raw = points.select_cols(out.columns);
  out.coords = out.raw;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < out.dim; ++k) out.coords(i, k) -= out.origin[out.columns[k]];
  }
  return out;
}

VPolytope::VPolytope(RatMatrix vertices) : vertices_(std::move(vertices)), proj_(affine_project(vertices_)) {}

VPolytope VPolytope::hull(const RatMatrix& points) {
  std::vector<std::size_t> keep;
  std::set<RatVector> seen;
  for (std::size_t i = 0; i < points.rows(); ++i) {
    if (seen.insert(points.row_vector(i)).second) keep.push_back(i);
  }
  VPolytope all(points.select_rows(keep));
  std::vector<std::size_t> vertices;
  for (std::size_t i = 0; i < all.num_vertices(); ++i) {
    if (is_face(all, std::vector<std::size_t>{i})) vertices.push_back(keep[i]);
  }
  return VPolytope(points.select_rows(vertices));
}

bool VPolytope::vertices_irredundant() const {
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    if (!is_face(*this, std::vector<std::size_t>{i})) return false;
  }
  return true;
}

bool is_face(const VPolytope& p, const VertexSet& subset) {
  std::vector<std::size_t> inside, outside;
  for (std::size_t i = 0; i < p.num_vertices(); ++i) (subset.contains(i) ? inside : outside).push_back(i);
  return separating_functional(p.projection().coords, inside, outside).has_value();
}

bool is_face(const VPolytope& p, const std::vector<std::size_t>& subset) {
  return is_face(p, VertexSet::from_indices(p.num_vertices(), subset));
}

std::optional<RatVector> is_centrally_symmetric(const VPolytope& p) {
  const std::size_t n = p.num_vertices(), dim = p.ambient_dim();
  if (n == 0) return std::nullopt;
  RatVector c(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < dim; ++k) c[k] += p.vertices()(i, k);
  }
  for (auto& x : c) x /= static_cast<long>(n);
  std::set<RatVector> vs;
  for (std::size_t i = 0; i < n; ++i) vs.insert(p.vertices().row_vector(i));
  for (std::size_t i = 0; i < n; ++i) {
    RatVector r(dim);
    for (std::size_t k = 0; k < dim; ++k) r[k] = 2 * c[k] - p.vertices()(i, k);
    if (!vs.count(r)) return std::nullopt;
  }
  return c;
}

namespace {

// Greedy affinely independent vertex indices, dim + 1 of them.
std::vector<std::size_t> affine_basis(const AffineProjection& proj) {
  std::vector<std::size_t> chosen{0};
  std::vector<RatVector> rows;
  const std::size_t n = proj.coords.rows();
  for (std::size_t i = 1; i < n && rows.size() < proj.dim; ++i) {
    rows.push_back(proj.coords.row_vector(i));
    if (rank_nullspace(RatMatrix::from_rows(rows, proj.dim)).rank == rows.size()) {
      chosen.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

}  // namespace

std::optional<AffineMap> affinely_equivalent(const VPolytope& p, const VPolytope& q) {
  if (p.dim() != q.dim() || p.num_vertices() != q.num_vertices()) return std::nullopt;
  const std::size_t d = p.dim();
  const auto& yp = p.projection().coords;
  const auto& yq = q.projection().coords;
  const auto basis = affine_basis(p.projection());

  // Columns of dp are the basis differences of p; dp is invertible.
  RatMatrix dp(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t r = 0; r < d; ++r) dp(r, k) = yp(basis[k + 1], r) - yp(basis[0], r);
  }
  const auto dp_inv = inverse(dp);
  if (!dp_inv) return std::nullopt;

  const auto lp = face_lattice(p);
  const auto lq = face_lattice(q);
  std::optional<AffineMap> found;
  for_each_combinatorial_isomorphism(lp, lq, [&](const LatticeIsomorphism& iso) {
    const auto& s = iso.vertex_map;
    RatMatrix dq(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t r = 0; r < d; ++r) dq(r, k) = yq(s[basis[k + 1]], r) - yq(s[basis[0]], r);
    }
    RatMatrix a(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Rational v = 0;
        for (std::size_t k = 0; k < d; ++k) v += dq(i, k) * (*dp_inv)(k, j);
        a(i, j) = v;
      }
    }
    RatVector t(d);
    for (std::size_t i = 0; i < d; ++i) {
      t[i] = yq(s[basis[0]], i);
      for (std::size_t j = 0; j < d; ++j) t[i] -= a(i, j) * yp(basis[0], j);
    }
    for (std::size_t v = 0; v < p.num_vertices(); ++v) {
      for (std::size_t i = 0; i < d; ++i) {
        Rational img = t[i];
        for (std::size_t j = 0; j < d; ++j) img += a(i, j) * yp(v, j);
        if (img != yq(s[v], i)) return true;
      }
    }
    found = AffineMap{s, std::move(a), std::move(t)};
    return false;
  });
  return found;
}

LatticeIndex lattice_index(const IntMatrix& points) {
  LatticeIndex out;
  out.index = 1;
  if (points.rows() < 2) return out;
  IntMatrix diffs(points.rows() - 1, points.cols());
  for (std::size_t i = 1; i < points.rows(); ++i) {
    for (std::size_t k = 0; k < points.cols(); ++k) diffs(i - 1, k) = points(i, k) - points(0, k);
  }
  for (auto& d : smith_normal_form(std::move(diffs))) {
    if (sgn(d) == 0) continue;
    out.index *= d;
    out.divisors.push_back(d);
  }
  return out;
}

}  // namespace permpoly
