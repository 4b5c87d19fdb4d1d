#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "permpoly/error.hpp"
#include "permpoly/central_symmetry.hpp"
#include "permpoly/classify.hpp"
#include "permpoly/constructions.hpp"
#include "permpoly/constructors.hpp"
#include "permpoly/face_lattice.hpp"
#include "permpoly/group_isomorphism.hpp"
#include "permpoly/invariants.hpp"
#include "permpoly/lattice_isomorphism.hpp"
#include "permpoly/perm_polytope.hpp"
#include "permpoly/polytope.hpp"
#include "permpoly/reference.hpp"
#include "permpoly/representation.hpp"

using namespace permpoly;
using testing_support::make_group;

namespace {

FaceLattice lattice(const PermutationGroup& g) { return face_lattice(build(g).vpoly); }

FaceLattice face_of(const PermutationGroup& g, const std::vector<std::size_t>& face) {
  std::vector<Permutation> v;
  for (auto i : face) v.push_back(g.element(i));
  return face_lattice(VPolytope(permutation_matrix_rows(v, g.degree())));
}

bool iso(const FaceLattice& a, const FaceLattice& b) { return combinatorially_isomorphic(a, b).has_value(); }

const char* kEvenPairs = "(1 2)(3 4); (1 2)(5 6); (1 2)(7 8)";
const char* kOctahedron = "(1 2 3)(7 8 9); (4 5 6)(10 11 12); (1 2 3)(4 5 6)";

}  // namespace

TEST(PermPolytope, BuildExamples) {
  auto p = build(make_group(5, "(1 2 3 4 5)"));
  EXPECT_EQ(p.dim(), 4u);
  EXPECT_EQ(p.vpoly.num_vertices(), 5u);
  EXPECT_EQ(build(PermutationGroup::trivial(4)).dim(), 0u);
  p = build(make_group(3, "(1 2); (1 2 3)"));
  EXPECT_EQ(p.dim(), 4u);
  EXPECT_EQ(p.vpoly.num_vertices(), 6u);
}

TEST(PermPolytope, DimensionExamples) {
  EXPECT_EQ(dimension(regular_representation(make_group(3, "(1 2); (1 2 3)"))), 5u);
  EXPECT_EQ(dimension(make_group(8, "(1 2); (3 4); (5 6); (7 8)")), 4u);
  EXPECT_EQ(dimension(make_group(3, "(1 2); (1 2 3)")), 4u);
  // Against the rank oracle on the corpus.
  for (const auto& ng : testing_support::corpus())
    EXPECT_EQ(dimension(ng.group), oracle::affine_dim(testing_support::points(ng.group))) << ng.name;
}

TEST(PermPolytope, OriginNeverInAffineHull) {
  for (const auto& ng : testing_support::corpus()) EXPECT_FALSE(origin_in_affine_hull(build(ng.group))) << ng.name;
}

TEST(PermPolytope, FaceFromSubsetExamples) {
  const auto even_pairs = make_group(8, kEvenPairs);
  const auto z12 = parse_cycles("(1 2)(3 4)", 8), z13 = parse_cycles("(1 2)(5 6)", 8);
  const auto f = face_from_subset(even_pairs, {even_pairs.identity(), z12, z13});
  EXPECT_TRUE(std::count(f.begin(), f.end(), even_pairs.index_or_throw(parse_cycles("(3 4)(5 6)", 8))));
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(face_from_subset(even_pairs, {even_pairs.identity()}), std::vector<std::size_t>{0});
  EXPECT_THROW(face_from_subset(even_pairs, {parse_cycles("(1 2)", 8)}), Error);
  EXPECT_THROW(face_from_subset(even_pairs, {}), Error);
}

TEST(PermPolytope, FaceFromSubsetAgainstOracles) {
  // For every pair and triple S: F(S) matches the support rule computed from
  // raw images, is an oracle face containing S, and for pairs it is the
  // smallest such face. Triples may give more (the even-pairs group does).
  const std::vector<std::pair<std::size_t, std::string>> groups = {
      {6, "(1 2); (3 4); (5 6)"}, {3, "(1 2); (1 2 3)"}, {8, kEvenPairs}, {4, "(1 2 3 4); (1 3)"}};
  bool strictly_larger_seen = false;
  for (const auto& [n, gens] : groups) {
    const auto g = make_group(n, gens);
    const auto pts = testing_support::points(g);
    const auto imgs = testing_support::images(g);
    const auto faces = oracle::faces(oracle::facets(pts), static_cast<int>(g.order()));
    const std::size_t m = g.order();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b)
        for (std::size_t c = b; c < m; ++c) {
          std::vector<int> best, rule;
          bool found = false;
          for (const auto& f : faces) {
            auto has = [&](std::size_t i) { return std::binary_search(f.begin(), f.end(), static_cast<int>(i)); };
            if (has(a) && has(b) && has(c) && (!found || f.size() < best.size())) {
              best = f;
              found = true;
            }
          }
          for (std::size_t x = 0; x < m; ++x) {
            bool inside = true;
            for (std::size_t j = 0; j < n && inside; ++j) {
              const int i = imgs[x][j];
              inside = imgs[a][j] == i || imgs[b][j] == i || imgs[c][j] == i;
            }
            if (inside) rule.push_back(static_cast<int>(x));
          }
          const auto got = face_from_subset(g, {g.element(a), g.element(b), g.element(c)});
          const std::vector<int> gv(got.begin(), got.end());
          EXPECT_EQ(gv, rule) << gens;
          EXPECT_TRUE(faces.count(gv)) << gens;
          if (a == b || b == c) EXPECT_EQ(gv, best) << gens;
          if (gv.size() > best.size()) strictly_larger_seen = true;
        }
  }
  EXPECT_TRUE(strictly_larger_seen);
}

TEST(PermPolytope, SmallestFacePairExamples) {
  const auto even_pairs = make_group(8, kEvenPairs);
  const auto g0 = parse_cycles("(1 2)(3 4)(5 6)(7 8)", 8);
  EXPECT_EQ(smallest_face_pair(even_pairs, even_pairs.identity(), g0).size(), 8u);
  EXPECT_EQ(smallest_face_pair(even_pairs, g0, g0), std::vector<std::size_t>{even_pairs.index_or_throw(g0)});
  const auto oct = make_group(12, kOctahedron);
  const auto g1 = parse_cycles("(1 2 3)(4 5 6)(7 8 9)(10 11 12)", 12);
  const auto v1 = smallest_face_pair(oct, oct.identity(), g1);
  EXPECT_EQ(v1.size(), 6u);
  EXPECT_TRUE(iso(face_of(oct, v1), reference_lattice("octahedron")));
}

TEST(PermPolytope, EdgeGraphExamples) {
  auto e = edge_graph(make_group(6, "(1 2); (3 4); (5 6)"));
  EXPECT_EQ(e.degree, 3u);
  EXPECT_TRUE(e.regular);
  e = edge_graph(make_group(3, "(1 2); (1 2 3)"));
  EXPECT_EQ(e.degree, 5u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(e.adjacency[i].size(), 5u);
  e = edge_graph(make_group(3, "(1 2 3)"));
  EXPECT_EQ(e.degree, 2u);
  // Against the face lattice: edges are the 2-vertex faces.
  for (const auto& ng : testing_support::corpus()) {
    const auto l = lattice(ng.group);
    const auto eg = edge_graph(ng.group);
    std::size_t edges = 0;
    for (const auto& a : eg.adjacency) edges += a.size();
    const auto f = l.f_vector();
    // A segment's edge is the polytope itself, not a proper face.
    const std::size_t want = l.dim() == 1 ? 1 : (f.size() > 1 ? f[1] : 0);
    EXPECT_EQ(edges / 2, want) << ng.name;
  }
}

TEST(PermPolytope, InvariantSuiteOnCorpus) {
  const auto corpus = testing_support::corpus();
  EXPECT_GE(corpus.size(), 25u);
  for (const auto& ng : corpus) {
    const auto r = check_invariants(ng.group);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << ng.name << ": " << c.name;
  }
}

TEST(Representation, KernelExamples) {
  for (const auto& s : testing_support::small_groups())
    EXPECT_EQ(affine_kernel(regular_representation(s.group)).dim(), 0u) << s.name;
  const auto klein = make_group(4, "(1 2); (3 4)");
  const auto rho1 = Representation::natural(klein);
  const auto rho2 = Representation::from_generator_images(
      klein, {parse_cycles("(1 2)", 4), parse_cycles("(1 2)(3 4)", 4)}, 4);
  EXPECT_NE(affine_kernel(rho1), affine_kernel(rho2));
  EXPECT_FALSE(stably_equivalent(rho1, rho2));
  EXPECT_TRUE(stably_equivalent(rho1, rho1));
  EXPECT_TRUE(stably_equivalent(rho1, Representation::direct_sum(rho1, rho1)));
  EXPECT_THROW(stably_equivalent(rho1, Representation::natural(make_group(3, "(1 2 3)"))), Error);
  EXPECT_THROW(Representation::from_generator_images(klein, {parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)", 4)}, 4),
               Error);
}

// Kernel identity, and the kernel really consists of affine dependencies.
TEST(Representation, KernelIsAffineDependencies) {
  for (const auto& ng : testing_support::corpus()) {
    const auto k = affine_kernel(ng.group);
    const auto pts = testing_support::points(ng.group);
    EXPECT_EQ(k.dim(), ng.group.order() - 1 - oracle::affine_dim(pts)) << ng.name;
    for (const auto& l : k.basis) {
      mpq_class s = 0;
      for (const auto& x : l) s += x;
      EXPECT_EQ(s, 0);
      for (std::size_t c = 0; c < pts[0].size(); ++c) {
        mpq_class t = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) t += l[i] * pts[i][c];
        EXPECT_EQ(t, 0);
      }
    }
  }
}

TEST(Representation, StableEquivalenceIsAnEquivalenceRelation) {
  // Representations of three groups, each in several guises.
  std::vector<std::vector<Representation>> by_group;
  const std::vector<std::pair<std::size_t, std::string>> groups = {
      {4, "(1 2); (3 4)"}, {4, "(1 2 3 4)"}, {3, "(1 2); (1 2 3)"}};
  for (const auto& [n, gens] : groups) {
    const auto g = make_group(n, gens);
    const auto nat = Representation::natural(g);
    const auto reg = Representation::regular(g);
    by_group.push_back({nat, reg, Representation::direct_sum(nat, reg), Representation::direct_sum(nat, nat),
                        Representation::direct_sum(reg, reg)});
  }
  const auto klein = make_group(4, "(1 2); (3 4)");
  by_group[0].push_back(Representation::from_generator_images(klein, {parse_cycles("(1 2)", 4), parse_cycles("(1 2)(3 4)", 4)}, 4));
  std::size_t total = 0;
  for (const auto& reps : by_group) {
    total += reps.size();
    const std::size_t k = reps.size();
    std::vector<std::vector<bool>> r(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) r[i][j] = stably_equivalent(reps[i], reps[j]);
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_TRUE(r[i][i]);
      for (std::size_t j = 0; j < k; ++j) {
        EXPECT_EQ(r[i][j], r[j][i]);
        for (std::size_t l = 0; l < k; ++l)
          if (r[i][j] && r[j][l]) EXPECT_TRUE(r[i][l]);
      }
    }
    // natural + regular is stably equivalent to regular.
    EXPECT_TRUE(r[1][2]);
  }
  EXPECT_GE(total, 10u);
}

TEST(Representation, EffectiveEquivalenceExamples) {
  const auto z4 = make_group(4, "(1 2 3 4)");
  const auto z4b = make_group(6, "(1 2 3 4)(5 6)");
  const auto klein = make_group(4, "(1 2)(3 4); (1 3)(2 4)");
  const auto w = effectively_equivalent(z4, z4b);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(affine_kernel(z4), affine_kernel(Representation::pullback(z4b, *w)));
  EXPECT_FALSE(effectively_equivalent(z4, klein).has_value());
  const auto self = effectively_equivalent(klein, klein);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(is_simplex(z4));
  EXPECT_FALSE(is_simplex(make_group(4, "(1 2); (3 4)")));
  EXPECT_TRUE(is_simplex(make_group(6, "(1 2)(3 4); (1 2)(5 6)")));
}

TEST(CentralSymmetry, Data) {
  const auto even_pairs = central_symmetry_data(make_group(8, kEvenPairs));
  ASSERT_TRUE(even_pairs.has_value());
  EXPECT_EQ(even_pairs->r, 4u);
  EXPECT_EQ(even_pairs->dim(), 3u);
  EXPECT_TRUE(even_pairs->contains({1, 1, 1, 1}));
  EXPECT_FALSE(even_pairs->contains({1, 0, 0, 0}));
  EXPECT_FALSE(central_symmetry_data(make_group(3, "(1 2 3)")).has_value());
  const auto cube = central_symmetry_data(make_group(6, "(1 2); (3 4); (5 6)"));
  ASSERT_TRUE(cube.has_value());
  EXPECT_EQ(cube->r, 3u);
  EXPECT_EQ(cube->dim(), 3u);
  // Agrees with the polytope being centrally symmetric, on the corpus.
  for (const auto& ng : testing_support::corpus())
    EXPECT_EQ(central_symmetry_data(ng.group).has_value(), is_centrally_symmetric(build(ng.group).vpoly).has_value())
        << ng.name;
}

TEST(CentralSymmetry, F2Rref) {
  const auto r = f2_rref({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], (F2Vector{1, 0, 1}));
  EXPECT_EQ(r[1], (F2Vector{0, 1, 1}));
}

TEST(CentralSymmetry, FreeSumDouble) {
  const auto sq = make_group(4, "(1 2); (3 4)");
  const auto d = free_sum_double(sq);
  EXPECT_EQ(d.order(), 8u);
  EXPECT_EQ(d.degree(), 8u);
  EXPECT_TRUE(iso(lattice(d), reference_lattice("crosspolytope(4)")));
  const auto seg = free_sum_double(make_group(2, "(1 2)"));
  EXPECT_TRUE(iso(lattice(seg), reference_lattice("square")));
  const auto twice = free_sum_double(seg);
  EXPECT_EQ(twice.order(), 8u);
  EXPECT_TRUE(iso(lattice(twice), reference_lattice("crosspolytope(4)")));
  const std::vector<std::pair<std::size_t, std::string>> groups = {
      {2, "(1 2)"}, {4, "(1 2); (3 4)"}, {6, "(1 2); (3 4); (5 6)"}};
  for (const auto& [n, gens] : groups) {
    const auto g = make_group(n, gens);
    const auto l = lattice(g);
    const auto dd = free_sum_double(g);
    EXPECT_EQ(dd.order(), 2 * g.order());
    EXPECT_TRUE(iso(lattice(dd), free_sum(l, l))) << gens;
  }
  EXPECT_THROW(free_sum_double(make_group(3, "(1 2 3)")), Error);
}

TEST(Constructions, CanonicalGroups) {
  EXPECT_EQ(canonical_group("cube(3)").elements(), make_group(6, "(1 2); (3 4); (5 6)").elements());
  const auto c4 = crosspolytope_generators(4);
  ASSERT_EQ(c4.size(), 3u);
  EXPECT_EQ(format_cycles(c4[0]), "(1 2)(3 4)(5 6)(7 8)");
  EXPECT_EQ(format_cycles(c4[1]), "(3 4)(7 8)");
  EXPECT_EQ(format_cycles(c4[2]), "(5 6)(7 8)");
  const auto c2 = canonical_group("crosspolytope(2)");
  EXPECT_EQ(c2.order(), 4u);
  EXPECT_TRUE(iso(lattice(c2), reference_lattice("square")));
  EXPECT_TRUE(iso(lattice(canonical_group("crosspolytope(4)")), reference_lattice("crosspolytope(4)")));
  EXPECT_TRUE(iso(lattice(canonical_group("crosspolytope(8)")), reference_lattice("crosspolytope(8)")));
  EXPECT_THROW(canonical_group("crosspolytope(3)"), Error);
  EXPECT_EQ(canonical_group("regular(Z/2 x Z/4)").degree(), 8u);
  EXPECT_EQ(canonical_group("table1(6)").order(), 8u);
  EXPECT_THROW(canonical_group("table1(15)"), Error);
  EXPECT_THROW(canonical_group("tetris(3)"), Error);
}

TEST(Constructions, ConstrFace) {
  const auto oct = constr_face(1, 2);
  EXPECT_EQ(oct.group.degree(), 12u);
  EXPECT_EQ(oct.group.order(), 27u);
  EXPECT_EQ(oct.face.size(), 6u);
  EXPECT_EQ(oct.group.elements(), make_group(12, kOctahedron).elements());
  EXPECT_TRUE(iso(face_of(oct.group, oct.face), reference_lattice("octahedron")));
  const auto sq = constr_face(0, 2);
  EXPECT_EQ(sq.face.size(), 4u);
  EXPECT_TRUE(iso(face_of(sq.group, sq.face), reference_lattice("square")));
  const auto sq2 = constr_face(2, 0);
  EXPECT_EQ(sq2.face.size(), 4u);
  EXPECT_TRUE(iso(face_of(sq2.group, sq2.face), reference_lattice("square")));
  for (auto [l, d] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {1, 3}, {3, 0}}) {
    const auto c = constr_face(l, d);
    EXPECT_TRUE(is_face(build(c.group).vpoly, c.face));
    const auto cross = reference_lattice("crosspolytope(" + std::to_string(l) + ")");
    const auto target = d == 0 ? cross : free_sum(cross, reference_lattice("cube(" + std::to_string(d) + ")"));
    EXPECT_TRUE(iso(face_of(c.group, c.face), target)) << l << "," << d;
  }
  EXPECT_THROW(constr_face(0, 0), Error);
}

TEST(Constructions, ProductDecompositions) {
  auto ds = product_decompositions(make_group(5, "(1 2); (3 4 5)"));
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].h1.order(), 2u);
  EXPECT_EQ(ds[0].h2.order(), 3u);
  EXPECT_TRUE(product_decompositions(make_group(8, kEvenPairs)).empty());
  EXPECT_TRUE(product_decompositions(make_group(3, "(1 2 3)")).empty());
  // If direction: a decomposition means the lattice is the product.
  for (const auto& ng : testing_support::corpus()) {
    if (build(ng.group).dim() > 5) continue;
    for (const auto& d : product_decompositions(ng.group))
      EXPECT_TRUE(iso(lattice(ng.group), product(lattice(d.h1), lattice(d.h2)))) << ng.name;
  }
}

// Only-if direction on the dim <= 4 corpus: a lattice that is a product of
// two reference lattices comes from a group with a decomposition.
TEST(Constructions, ProductOnlyIf) {
  const std::vector<std::string> refs = {"segment", "triangle", "square", "tetrahedron", "triangular_prism"};
  for (const auto& ng : testing_support::corpus()) {
    const auto p = build(ng.group);
    if (p.dim() > 4) continue;
    const auto l = face_lattice(p.vpoly);
    bool is_product = false;
    for (const auto& a : refs)
      for (const auto& b : refs) is_product = is_product || iso(l, product(reference_lattice(a), reference_lattice(b)));
    if (is_product) EXPECT_FALSE(product_decompositions(ng.group).empty()) << ng.name;
  }
}

TEST(Constructions, SimplePolytopeCheck) {
  auto c = simple_polytope_check(make_group(6, "(1 2); (3 4); (5 6)"));
  EXPECT_TRUE(c.applies);
  EXPECT_EQ(c.factors.size(), 3u);
  EXPECT_TRUE(c.factors_regular);
  c = simple_polytope_check(make_group(5, "(1 2 3 4 5)"));
  EXPECT_TRUE(c.applies);
  EXPECT_EQ(c.factors.size(), 1u);
  EXPECT_TRUE(c.factors_regular);
  c = simple_polytope_check(make_group(3, "(1 2); (1 2 3)"));
  EXPECT_FALSE(c.applies);
  EXPECT_EQ(c.indecomposables, 5u);
  EXPECT_EQ(c.dim, 4u);
}

TEST(Constructions, SubgroupFaceTest) {
  const auto s3 = make_group(3, "(1 2); (1 2 3)");
  auto r = subgroup_face_test(s3, make_group(3, "(2 3)"));
  EXPECT_TRUE(r.is_face);
  EXPECT_TRUE(r.equals_orbit_stabilizer);
  EXPECT_FALSE(subgroup_face_test(s3, make_group(3, "(1 2 3)")).is_face);
  EXPECT_TRUE(subgroup_face_test(s3, s3).is_face);
  EXPECT_THROW(subgroup_face_test(make_group(3, "(1 2 3)"), make_group(3, "(1 2)")), Error);
}

TEST(Constructions, FacetComplements) {
  const auto b3 = make_group(3, "(1 2); (1 2 3)");
  EXPECT_TRUE(facet_complement_failures(lattice(b3)).empty());
  EXPECT_TRUE(facet_complement_failures(build(b3).vpoly, lattice(b3)).empty());
  const auto cross = canonical_group("crosspolytope(4)");
  EXPECT_TRUE(facet_complement_failures(build(cross).vpoly, lattice(cross)).empty());
  EXPECT_FALSE(facet_complement_failures(reference_lattice("table2(Q1)")).empty());
  EXPECT_FALSE(facet_complement_failures(reference_lattice("table2(Q2)")).empty());
  EXPECT_TRUE(facet_complement_failures(reference_lattice("table2(P)")).empty());
}
