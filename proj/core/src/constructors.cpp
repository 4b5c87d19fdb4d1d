#include "permpoly/constructors.hpp"

#include "permpoly/error.hpp"

namespace permpoly {

namespace {

FaceLattice segment() { return FaceLattice::from_facets(2, std::vector<std::vector<std::size_t>>{{0}, {1}}); }

}  // namespace

FaceLattice product(const FaceLattice& a, const FaceLattice& b) {
  const std::size_t na = a.num_vertices(), nb = b.num_vertices();
  std::vector<VertexSet> facets;
  if (a.dim() >= 1) {
    for (const auto& f : a.facets()) {
      VertexSet s(na * nb);
      for (auto i : f.indices()) {
        for (std::size_t j = 0; j < nb; ++j) s.insert(i * nb + j);
      }
      facets.push_back(std::move(s));
    }
  }
  if (b.dim() >= 1) {
    for (const auto& g : b.facets()) {
      VertexSet s(na * nb);
      for (std::size_t i = 0; i < na; ++i) {
        for (auto j : g.indices()) s.insert(i * nb + j);
      }
      facets.push_back(std::move(s));
    }
  }
  if (facets.empty()) facets.emplace_back(na * nb);  // point times point
  return FaceLattice::from_facets(na * nb, std::move(facets));
}

FaceLattice pyramid(const FaceLattice& a) {
  const std::size_t n = a.num_vertices();
  std::vector<VertexSet> facets;
  VertexSet base(n + 1);
  for (std::size_t i = 0; i < n; ++i) base.insert(i);
  facets.push_back(std::move(base));
  for (const auto& f : a.facets()) {
    VertexSet s(n + 1);
    for (auto i : f.indices()) s.insert(i);
    s.insert(n);
    facets.push_back(std::move(s));
  }
  return FaceLattice::from_facets(n + 1, std::move(facets));
}

FaceLattice free_sum(const FaceLattice& a, const FaceLattice& b) {
  if (a.dim() < 1 || b.dim() < 1) throw Error(ErrorCode::InvalidArgument, "free sum needs dim >= 1");
  const std::size_t na = a.num_vertices(), nb = b.num_vertices();
  std::vector<VertexSet> facets;
  for (const auto& f : a.facets()) {
    for (const auto& g : b.facets()) {
      VertexSet s(na + nb);
      for (auto i : f.indices()) s.insert(i);
      for (auto j : g.indices()) s.insert(na + j);
      facets.push_back(std::move(s));
    }
  }
  return FaceLattice::from_facets(na + nb, std::move(facets));
}

FaceLattice prism(const FaceLattice& a) { return product(a, segment()); }

FaceLattice bipyramid(const FaceLattice& a) { return free_sum(a, segment()); }

FaceLattice wedge(const FaceLattice& a, const VertexSet& face) {
  const std::size_t n = a.num_vertices();
  if (face.size() != n || !a.contains_face(face) || face.count() == n) {
    throw Error(ErrorCode::InvalidFace, "wedge needs a proper face");
  }
  std::vector<std::size_t> top(n, 0);  // index of the top copy of v
  std::size_t next = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (!face.contains(v)) top[v] = next++;
  }
  const std::size_t total = next;
  std::vector<VertexSet> facets;
  VertexSet bottom(total), upper(total);
  for (std::size_t v = 0; v < n; ++v) {
    bottom.insert(v);
    upper.insert(face.contains(v) ? v : top[v]);
  }
  facets.push_back(std::move(bottom));
  facets.push_back(std::move(upper));
  for (const auto& g : a.facets()) {
    if (g.is_subset_of(face)) continue;
    VertexSet s(total);
    for (auto v : g.indices()) {
      s.insert(v);
      if (!face.contains(v)) s.insert(top[v]);
    }
    facets.push_back(std::move(s));
  }
  return FaceLattice::from_facets(total, std::move(facets));
}

FaceLattice dual(const FaceLattice& a) {
  if (a.dim() < 1) throw Error(ErrorCode::InvalidArgument, "dual needs dim >= 1");
  std::vector<VertexSet> facets;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) facets.push_back(a.vertex_facets()[v]);
  return FaceLattice::from_facets(a.facets().size(), std::move(facets));
}

}  // namespace permpoly
