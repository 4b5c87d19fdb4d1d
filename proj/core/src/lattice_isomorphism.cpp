#include "permpoly/lattice_isomorphism.hpp"

#include <algorithm>
#include <map>

namespace permpoly {

namespace {

using Colors = std::vector<std::size_t>;

struct Coloring {
  Colors v1, f1, v2, f2;
};

std::vector<std::vector<std::size_t>> members(const FaceLattice& l) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : l.facets()) out.push_back(f.indices());
  return out;
}

std::vector<std::vector<std::size_t>> incident(const FaceLattice& l) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : l.vertex_facets()) out.push_back(s.indices());
  return out;
}

// One refinement step of `own` by the colours of the other side, with ids
// shared between both lattices.
void refine(Colors& own1, const Colors& other1, const std::vector<std::vector<std::size_t>>& adj1,
            Colors& own2, const Colors& other2, const std::vector<std::vector<std::size_t>>& adj2) {
  using Sig = std::pair<std::size_t, std::vector<std::size_t>>;
  auto signature = [](std::size_t c, const Colors& other, const std::vector<std::size_t>& nb) {
    Sig s{c, {}};
    for (auto x : nb) s.second.push_back(other[x]);
    std::sort(s.second.begin(), s.second.end());
    return s;
  };
  std::vector<Sig> s1, s2;
  for (std::size_t i = 0; i < own1.size(); ++i) s1.push_back(signature(own1[i], other1, adj1[i]));
  for (std::size_t i = 0; i < own2.size(); ++i) s2.push_back(signature(own2[i], other2, adj2[i]));
  std::map<Sig, std::size_t> ids;
  for (const auto& s : s1) ids.emplace(s, 0);
  for (const auto& s : s2) ids.emplace(s, 0);
  std::size_t next = 0;
  for (auto& [_, id] : ids) id = next++;
  for (std::size_t i = 0; i < own1.size(); ++i) own1[i] = ids[s1[i]];
  for (std::size_t i = 0; i < own2.size(); ++i) own2[i] = ids[s2[i]];
}

std::size_t distinct(const Colors& a) {
  Colors s = a;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

bool same_histogram(Colors a, Colors b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

class Search {
 public:
  Search(const FaceLattice& a, const FaceLattice& b, Coloring colors,
         const std::function<bool(const LatticeIsomorphism&)>& visit)
      : a_(a), b_(b), c_(std::move(colors)), visit_(visit) {
    const std::size_t n = a.num_vertices();
    // Breadth-first order over the vertex-facet graph of a.
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        const auto v = order_[head++];
        for (auto f : a.vertex_facets()[v].indices()) {
          for (auto w : a.facets()[f].indices()) {
            if (!seen[w]) {
              seen[w] = true;
              order_.push_back(w);
            }
          }
        }
      }
    }
    map_.assign(n, n);
    used_.assign(n, false);
  }

  std::size_t run() {
    std::vector<VertexSet> cand;
    const std::size_t nf = a_.facets().size();
    for (std::size_t f = 0; f < nf; ++f) {
      VertexSet s(b_.facets().size());
      for (std::size_t g = 0; g < b_.facets().size(); ++g) {
        if (c_.f2[g] == c_.f1[f]) s.insert(g);
      }
      cand.push_back(std::move(s));
    }
    descend(0, cand);
    return count_;
  }

 private:
  bool descend(std::size_t depth, const std::vector<VertexSet>& cand) {
    const std::size_t n = a_.num_vertices();
    if (depth == n) {
      LatticeIsomorphism iso;
      iso.vertex_map = map_;
      for (const auto& s : cand) iso.facet_map.push_back(s.indices().front());
      ++count_;
      return visit_(iso);
    }
    const auto v = order_[depth];
    const auto& in_v = a_.vertex_facets()[v];
    for (std::size_t w = 0; w < n; ++w) {
      if (used_[w] || c_.v2[w] != c_.v1[v]) continue;
      const auto& in_w = b_.vertex_facets()[w];
      const auto not_w = in_w.complement();
      std::vector<VertexSet> next = cand;
      bool ok = true;
      for (std::size_t f = 0; f < next.size() && ok; ++f) {
        next[f] &= in_v.contains(f) ? in_w : not_w;
        ok = !next[f].empty();
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = true;
      const bool go_on = descend(depth + 1, next);
      used_[w] = false;
      map_[v] = n;
      if (!go_on) return false;
    }
    return true;
  }

  const FaceLattice& a_;
  const FaceLattice& b_;
  Coloring c_;
  const std::function<bool(const LatticeIsomorphism&)>& visit_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t for_each_combinatorial_isomorphism(
    const FaceLattice& a, const FaceLattice& b,
    const std::function<bool(const LatticeIsomorphism&)>& visit) {
  if (a.num_vertices() != b.num_vertices() || a.facets().size() != b.facets().size() ||
      a.dim() != b.dim() || a.f_vector() != b.f_vector()) {
    return 0;
  }
  const auto fa = members(a), fb = members(b);
  const auto va = incident(a), vb = incident(b);
  Coloring c;
  for (const auto& s : va) c.v1.push_back(s.size());
  for (const auto& s : vb) c.v2.push_back(s.size());
  for (const auto& s : fa) c.f1.push_back(s.size());
  for (const auto& s : fb) c.f2.push_back(s.size());
  std::size_t classes = 0;
  while (true) {
    if (!same_histogram(c.v1, c.v2) || !same_histogram(c.f1, c.f2)) return 0;
    const std::size_t now = distinct(c.v1) + distinct(c.f1);
    if (now == classes) break;
    classes = now;
    Colors v1 = c.v1, v2 = c.v2;
    refine(c.v1, c.f1, va, c.v2, c.f2, vb);
    refine(c.f1, v1, fa, c.f2, v2, fb);
  }
  return Search(a, b, std::move(c), visit).run();
}

std::optional<LatticeIsomorphism> combinatorially_isomorphic(const FaceLattice& a,
                                                             const FaceLattice& b) {
  std::optional<LatticeIsomorphism> found;
  for_each_combinatorial_isomorphism(a, b, [&](const LatticeIsomorphism& iso) {
    found = iso;
    return false;
  });
  return found;
}

}  // namespace permpoly
