#include "permpoly/constructions.hpp"

#include <algorithm>
#include <bit>

#include "permpoly/error.hpp"
#include "permpoly/perm_polytope.hpp"
#include "permpoly/representation.hpp"

namespace permpoly {

namespace {

Permutation transpositions(std::size_t degree, const std::vector<std::size_t>& which) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (auto j : which) std::swap(images[2 * j], images[2 * j + 1]);
  return Permutation::from_images(std::move(images));
}

// (g, h) on 2n points.
Permutation pair(const Permutation& g, const Permutation& h) {
  const std::size_t n = g.degree();
  std::vector<Point> images(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = g(static_cast<Point>(i));
    images[n + i] = static_cast<Point>(n + h(static_cast<Point>(i)));
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace

PermutationGroup cube_group(std::size_t d) {
  std::vector<Permutation> gens;
  for (std::size_t j = 0; j < d; ++j) gens.push_back(transpositions(2 * d, {j}));
  return PermutationGroup::generate(std::move(gens), 2 * d);
}

std::vector<Permutation> crosspolytope_generators(std::size_t d) {
  if (d == 0 || !std::has_single_bit(d)) {
    throw Error(ErrorCode::NotAPowerOfTwo, "crosspolytope group needs a power of two, got " + std::to_string(d));
  }
  const std::size_t k = static_cast<std::size_t>(std::countr_zero(d));
  std::vector<std::size_t> all(d);
  for (std::size_t j = 0; j < d; ++j) all[j] = j;
  std::vector<Permutation> gens{transpositions(2 * d, all)};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < d; ++j) {
      if ((j >> i) & 1) cols.push_back(j);
    }
    gens.push_back(transpositions(2 * d, cols));
  }
  return gens;
}

PermutationGroup crosspolytope_group(std::size_t d) {
  return PermutationGroup::generate(crosspolytope_generators(d), 2 * d);
}

ConstrFace constr_face(std::size_t l, std::size_t d) {
  if (l + d == 0) throw Error(ErrorCode::InvalidArgument, "constr_face needs l + d >= 1");
  if (d == 0) return constr_face(l - 1, 1);
  const std::size_t n0 = 3 * d;
  // 2^l * 3d points, 3^(d+l) elements.
  if (l > 10 || (n0 << l) > 4096) throw Error(ErrorCode::CapExceeded, "constr_face tower too large");

  std::vector<Permutation> gens;
  std::vector<Point> g0(n0);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Point> images(n0);
    for (std::size_t x = 0; x < n0; ++x) images[x] = static_cast<Point>(x);
    images[3 * i] = static_cast<Point>(3 * i + 1);
    images[3 * i + 1] = static_cast<Point>(3 * i + 2);
    images[3 * i + 2] = static_cast<Point>(3 * i);
    for (std::size_t x = 0; x < 3; ++x) g0[3 * i + x] = images[3 * i + x];
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  Permutation g = Permutation::from_images(std::move(g0));
  std::size_t degree = n0;
  for (std::size_t i = 1; i <= l; ++i) {
    std::vector<Permutation> next;
    for (const auto& x : gens) next.push_back(pair(x, x));
    const Permutation e(degree);
    next.push_back(pair(g, e));
    g = pair(g, g);
    gens = std::move(next);
    degree *= 2;
  }
  auto group = PermutationGroup::generate(gens, degree);
  auto face = smallest_face_pair(group, group.identity(), g);
  return ConstrFace{std::move(group), std::move(g), std::move(face)};
}

std::vector<ProductDecomposition> product_decompositions(const PermutationGroup& group) {
  std::vector<std::vector<Point>> orbits;
  for (auto& o : group.orbits()) {
    if (o.size() > 1) orbits.push_back(std::move(o));
  }
  std::vector<ProductDecomposition> out;
  const std::size_t k = orbits.size();
  if (k < 2 || k > 20) return out;
  const std::size_t n = group.degree();
  // Orbit 0 always goes to part 1, so each unordered split is seen once.
  for (std::size_t mask = 0; mask < (std::size_t{1} << (k - 1)); ++mask) {
    std::vector<bool> in1(n, false);
    ProductDecomposition dec;
    for (std::size_t o = 0; o < k; ++o) {
      const bool first = o == 0 || !((mask >> (o - 1)) & 1);
      for (auto x : orbits[o]) {
        in1[x] = first;
        (first ? dec.part1 : dec.part2).push_back(x);
      }
    }
    if (dec.part2.empty()) continue;
    std::sort(dec.part1.begin(), dec.part1.end());
    std::sort(dec.part2.begin(), dec.part2.end());
    std::vector<Permutation> e1, e2;
    for (const auto& g : group.elements()) {
      const auto s = g.support();
      if (std::all_of(s.begin(), s.end(), [&](Point x) { return in1[x]; })) e1.push_back(g);
      if (std::none_of(s.begin(), s.end(), [&](Point x) { return in1[x]; })) e2.push_back(g);
    }
    if (e1.size() * e2.size() != group.order() || e1.size() == 1 || e2.size() == 1) continue;
    dec.h1 = PermutationGroup::from_elements(std::move(e1), n);
    dec.h2 = PermutationGroup::from_elements(std::move(e2), n);
    out.push_back(std::move(dec));
  }
  return out;
}

namespace {

// Splits G into factors that admit no further product decomposition.
void split(const PermutationGroup& g, std::vector<PermutationGroup>& out) {
  const auto decs = product_decompositions(g);
  if (decs.empty()) {
    out.push_back(g);
    return;
  }
  split(decs.front().h1, out);
  split(decs.front().h2, out);
}

}  // namespace

SimpleCheck simple_polytope_check(const PermutationGroup& group) {
  SimpleCheck out;
  out.dim = dimension(group);
  for (std::size_t i = 1; i < group.order(); ++i) {
    if (is_indecomposable(group.element(i), group)) ++out.indecomposables;
  }
  out.applies = out.indecomposables == out.dim;
  if (!out.applies) return out;
  split(group, out.factors);
  out.factors_regular = std::all_of(out.factors.begin(), out.factors.end(), [](const PermutationGroup& h) {
    return stably_equivalent(Representation::natural(h), Representation::regular(h));
  });
  return out;
}

SubgroupFaceResult subgroup_face_test(const PermutationGroup& group, const PermutationGroup& sub) {
  if (!sub.is_subgroup_of(group)) throw Error(ErrorCode::NotASubgroup, "H is not a subgroup of G");
  const auto p = build(group);
  VertexSet s(group.order());
  for (const auto& h : sub.elements()) s.insert(group.index_or_throw(h));
  SubgroupFaceResult out;
  out.is_face = is_face(p.vpoly, s);
  out.equals_orbit_stabilizer = stabilizer(group, orbit_partition(sub)) == sub;
  return out;
}

std::vector<std::size_t> facet_complement_failures(const FaceLattice& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < lattice.facets().size(); ++f) {
    if (!lattice.contains_face(lattice.facets()[f].complement())) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> facet_complement_failures(const VPolytope& p, const FaceLattice& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < lattice.facets().size(); ++f) {
    if (!is_face(p, lattice.facets()[f].complement())) out.push_back(f);
  }
  return out;
}

}  // namespace permpoly
