#include "permpoly/double_description.hpp"

#include <algorithm>

#include "permpoly/error.hpp"
#include "permpoly/linalg.hpp"
#include "permpoly/polytope.hpp"

namespace permpoly {

namespace {

struct Ray {
  IntVector h;
  VertexSet zeros;  // processed rows with a . h == 0
};

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

HRepresentation facet_enumeration(const VPolytope& p, std::size_t vertex_cap, std::size_t dim_cap) {
  const std::size_t m = p.num_vertices();
  const std::size_t d = p.dim();
  if (m > vertex_cap) throw Error(ErrorCode::CapExceeded, "facet enumeration: too many vertices");
  if (d > dim_cap) throw Error(ErrorCode::CapExceeded, "facet enumeration: dimension too large");

  HRepresentation out;
  out.dim = d;
  out.columns = p.projection().columns;
  if (m == 0) return out;

  // Homogenized rows (1, x_J), scaled to integers.
  const std::size_t width = d + 1;
  std::vector<IntVector> rows(m);
  for (std::size_t i = 0; i < m; ++i) {
    RatVector r(width);
    r[0] = 1;
    for (std::size_t k = 0; k < d; ++k) r[k + 1] = p.projection().raw(i, k);
    rows[i] = primitive_integer(r);
  }

  // Initial simplex cone from the first independent rows.
  std::vector<std::size_t> initial;
  {
    std::vector<RatVector> picked;
    for (std::size_t i = 0; i < m && initial.size() < width; ++i) {
      picked.push_back(to_rational(rows[i]));
      if (rank_nullspace(RatMatrix::from_rows(picked, width)).rank == picked.size()) {
        initial.push_back(i);
      } else {
        picked.pop_back();
      }
    }
  }
  RatMatrix b(width, width);
  for (std::size_t r = 0; r < width; ++r) {
    for (std::size_t c = 0; c < width; ++c) b(r, c) = rows[initial[r]][c];
  }
  const RatMatrix binv = *inverse(b);

  std::vector<bool> processed(m, false);
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < width; ++k) {
    RatVector col(width);
    for (std::size_t r = 0; r < width; ++r) col[r] = binv(r, k);
    Ray ray{primitive_integer(col), VertexSet(m)};
    for (std::size_t j = 0; j < width; ++j) {
      if (j != k) ray.zeros.insert(initial[j]);
    }
    rays.push_back(std::move(ray));
  }
  for (auto i : initial) processed[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(rows[i], rays[r].h);
      const int s = sgn(val[r]);
      if (s > 0) pos.push_back(r);
      if (s < 0) neg.push_back(r);
      if (s == 0) rays[r].zeros.insert(i);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (sgn(val[r]) >= 0) next.push_back(rays[r]);
    }
    for (auto a : pos) {
      for (auto c : neg) {
        VertexSet common = rays[a].zeros & rays[c].zeros;
        if (common.count() + 2 < width) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != a && r != c && common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector t(width);
        for (std::size_t k = 0; k < width; ++k) t[k] = val[a] * rays[c].h[k] - val[c] * rays[a].h[k];
        common.insert(i);
        next.push_back(Ray{primitive_integer(t), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  for (auto& ray : rays) {
    Facet f;
    f.offset = ray.h[0];
    f.normal.assign(ray.h.begin() + 1, ray.h.end());
    f.vertices = std::move(ray.zeros);
    out.facets.push_back(std::move(f));
  }
  std::sort(out.facets.begin(), out.facets.end(), [](const Facet& x, const Facet& y) {
    if (x.offset != y.offset) return x.offset < y.offset;
    return x.normal < y.normal;
  });
  return out;
}

}  // namespace permpoly
