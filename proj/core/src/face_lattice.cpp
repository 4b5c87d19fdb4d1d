#include "permpoly/face_lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "permpoly/double_description.hpp"
#include "permpoly/error.hpp"
#include "permpoly/polytope.hpp"

namespace permpoly {

FaceLattice FaceLattice::from_facets(std::size_t num_vertices,
                                     const std::vector<std::vector<std::size_t>>& facets) {
  std::vector<VertexSet> sets;
  for (const auto& f : facets) {
    for (auto v : f) {
      if (v >= num_vertices) throw Error(ErrorCode::InvalidArgument, "facet vertex out of range");
    }
    sets.push_back(VertexSet::from_indices(num_vertices, f));
  }
  return from_facets(num_vertices, std::move(sets));
}

FaceLattice FaceLattice::from_facets(std::size_t num_vertices, std::vector<VertexSet> facets) {
  FaceLattice l;
  l.num_vertices_ = num_vertices;
  for (auto& f : facets) {
    if (f.size() != num_vertices) throw Error(ErrorCode::InvalidArgument, "facet has wrong universe");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (std::size_t a = 0; a < facets.size(); ++a) {
    for (std::size_t b = 0; b < facets.size(); ++b) {
      if (a != b && facets[a].is_subset_of(facets[b])) {
        throw Error(ErrorCode::InvalidArgument, "a facet is contained in another facet");
      }
    }
  }
  l.facets_ = std::move(facets);

  l.vertex_facets_.assign(num_vertices, VertexSet(l.facets_.size()));
  for (std::size_t f = 0; f < l.facets_.size(); ++f) {
    for (auto v : l.facets_[f].indices()) l.vertex_facets_[v].insert(f);
  }

  // Close {V} under intersection with facets.
  std::vector<VertexSet> sets{VertexSet::full(num_vertices), VertexSet(num_vertices)};
  std::unordered_map<VertexSet, std::size_t> seen{{sets[0], 0}, {sets[1], 1}};
  for (std::size_t q = 0; q < sets.size(); ++q) {
    for (const auto& f : l.facets_) {
      VertexSet y = sets[q] & f;
      if (seen.emplace(y, sets.size()).second) sets.push_back(std::move(y));
    }
  }

  // Grade by rank: dim(X) = 1 + max dim of faces strictly inside X.
  std::vector<std::size_t> order(sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::size_t> counts(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) counts[i] = sets[i].count();
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return counts[a] < counts[b]; });
  std::vector<int> dims(sets.size(), -1);
  for (std::size_t a = 0; a < order.size(); ++a) {
    const auto i = order[a];
    int best = -2;
    for (std::size_t b = 0; b < a; ++b) {
      const auto j = order[b];
      if (counts[j] < counts[i] && dims[j] > best && sets[j].is_subset_of(sets[i])) best = dims[j];
    }
    dims[i] = best + 1;
  }
  for (std::size_t i = 0; i < sets.size(); ++i) l.faces_.push_back(Face{dims[i], std::move(sets[i])});
  std::sort(l.faces_.begin(), l.faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  l.dim_ = l.faces_.back().dim;
  for (std::size_t i = 0; i < l.faces_.size(); ++i) l.index_.emplace(l.faces_[i].vertices, i);
  return l;
}

std::vector<VertexSet> FaceLattice::faces_of_dim(int d) const {
  std::vector<VertexSet> out;
  for (const auto& f : faces_) {
    if (f.dim == d) out.push_back(f.vertices);
  }
  return out;
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f(dim_ > 0 ? static_cast<std::size_t>(dim_) : 0, 0);
  for (const auto& face : faces_) {
    if (face.dim >= 0 && face.dim < dim_) ++f[static_cast<std::size_t>(face.dim)];
  }
  return f;
}

std::vector<std::size_t> FaceLattice::vertex_degrees() const {
  std::vector<std::size_t> deg(num_vertices_, 0);
  for (const auto& face : faces_) {
    if (face.dim != 1) continue;
    for (auto v : face.vertices.indices()) ++deg[v];
  }
  return deg;
}

VertexSet FaceLattice::closure(const VertexSet& s) const {
  VertexSet c = VertexSet::full(num_vertices_);
  for (const auto& f : facets_) {
    if (s.is_subset_of(f)) c &= f;
  }
  return c;
}

std::optional<int> FaceLattice::face_dim(const VertexSet& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return faces_[it->second].dim;
}

bool FaceLattice::euler_holds() const {
  long sum = 0;
  const auto f = f_vector();
  for (std::size_t i = 0; i < f.size(); ++i) sum += (i % 2 == 0 ? 1 : -1) * static_cast<long>(f[i]);
  return sum == 1 - (dim_ % 2 == 0 ? 1 : -1);
}

FaceLattice FaceLattice::face_lattice_of(const VertexSet& face) const {
  const auto d = face_dim(face);
  if (!d) throw Error(ErrorCode::InvalidFace, "not a face of the lattice");
  const auto members = face.indices();
  std::vector<std::size_t> rank(num_vertices_, 0);
  for (std::size_t k = 0; k < members.size(); ++k) rank[members[k]] = k;
  std::vector<VertexSet> sub;
  for (const auto& f : faces_) {
    if (f.dim != *d - 1 || !f.vertices.is_subset_of(face)) continue;
    VertexSet s(members.size());
    for (auto v : f.vertices.indices()) s.insert(rank[v]);
    sub.push_back(std::move(s));
  }
  return from_facets(members.size(), std::move(sub));
}

FaceLattice face_lattice(const VPolytope& p) {
  const auto h = facet_enumeration(p);
  std::vector<VertexSet> facets;
  for (const auto& f : h.facets) facets.push_back(f.vertices);
  return FaceLattice::from_facets(p.num_vertices(), std::move(facets));
}

}  // namespace permpoly
