#include "permpoly/filters.hpp"

#include <bit>

namespace permpoly {

std::optional<LatticeIsomorphism> combinatorial_central_symmetry(
    const FaceLattice& l, std::optional<std::pair<std::size_t, std::size_t>> swap) {
  const std::size_t n = l.num_vertices();
  if (n % 2 != 0) return std::nullopt;
  std::optional<LatticeIsomorphism> found;
  for_each_combinatorial_isomorphism(l, l, [&](const LatticeIsomorphism& iso) {
    const auto& s = iso.vertex_map;
    if (swap && (s[swap->first] != swap->second || s[swap->second] != swap->first)) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (s[v] == v || s[s[v]] != v) return true;
    }
    for (std::size_t f = 0; f < l.facets().size(); ++f) {
      if (!(l.facets()[f] & l.facets()[iso.facet_map[f]]).empty()) return true;
    }
    found = iso;
    return false;
  });
  return found;
}

bool smallface_filter(const FaceLattice& l) {
  const std::size_t n = l.num_vertices();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto face = l.closure(VertexSet::from_indices(n, {u, v}));
      const auto sub = l.face_lattice_of(face);
      // Renumber u and v by their rank inside the face.
      std::size_t ru = 0, rv = 0, k = 0;
      for (auto x : face.indices()) {
        if (x == u) ru = k;
        if (x == v) rv = k;
        ++k;
      }
      if (!combinatorial_central_symmetry(sub, std::make_pair(ru, rv))) return false;
    }
  }
  return true;
}

bool vertex_count_power_of_two_filter(const FaceLattice& l) {
  if (!combinatorial_central_symmetry(l)) return true;
  return std::has_single_bit(l.num_vertices());
}

}  // namespace permpoly
