#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "permpoly/error.hpp"
#include "permpoly/linalg.hpp"
#include "permpoly/lp.hpp"
#include "permpoly/perm_polytope.hpp"

using namespace permpoly;

namespace {

RatMatrix rat(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix integer(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<oracle::IntRow> as_rows(const IntMatrix& m) {
  std::vector<oracle::IntRow> out(m.rows(), oracle::IntRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

IntMatrix random_int(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

// Product of random elementary integer operations, determinant +-1.
IntMatrix unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> f(-3, 3);
  for (int s = 0; s < 12; ++s) {
    const auto a = pick(rng), b = pick(rng);
    if (a == b) {
      for (std::size_t j = 0; j < n; ++j) u(a, j) = -u(a, j);
    } else {
      const int k = f(rng);
      for (std::size_t j = 0; j < n; ++j) u(a, j) += k * u(b, j);
    }
  }
  return u;
}

void expect_all_canonical(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_TRUE(is_canonical(m(i, j)));
}

}  // namespace

TEST(Linalg, RankNullspaceExamples) {
  auto r = rank_nullspace(RatMatrix::identity(3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_TRUE(r.nullspace.empty());

  r = rank_nullspace(rat({{1, 1, 1}}));
  EXPECT_EQ(r.rank, 1u);
  ASSERT_EQ(r.nullspace.size(), 2u);
  EXPECT_EQ(r.nullspace[0], (RatVector{1, 0, -1}));
  EXPECT_EQ(r.nullspace[1], (RatVector{0, 1, -1}));

  // Vertices of P(reg) for the Klein group are linearly independent.
  const auto reg = regular_representation(testing_support::make_group(4, "(1 2); (3 4)"));
  EXPECT_EQ(rank_nullspace(permutation_matrix_rows(reg.elements(), reg.degree())).rank, 4u);
}

TEST(Linalg, RankAgreesWithTransposeAndOracle) {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const auto m = random_int(rng, r, c, -2, 2);
    const auto q = to_rational(m);
    const auto a = rank_nullspace(q);
    EXPECT_EQ(a.rank, rank_nullspace(q.transpose()).rank);
    EXPECT_EQ(a.rank, integer_rank(m));
    std::vector<oracle::Point> rows(r, oracle::Point(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) rows[i][j] = q(i, j);
    EXPECT_EQ(a.rank, oracle::rank(rows));
    EXPECT_EQ(a.rank + a.nullspace.size(), c);
    for (const auto& v : a.nullspace) {
      for (const auto& x : multiply(q, v)) EXPECT_EQ(x, 0);
      for (const auto& x : v) EXPECT_TRUE(is_canonical(x));
    }
    expect_all_canonical(rref(q).matrix);
  }
}

TEST(Linalg, SolveExamples) {
  const RatVector b{3, mpq_class(-1, 2), 7};
  auto s = solve(RatMatrix::identity(3), b);
  ASSERT_TRUE(std::holds_alternative<RatVector>(s));
  EXPECT_EQ(std::get<RatVector>(s), b);

  s = solve(rat({{1, 1}}), {1});
  ASSERT_TRUE(std::holds_alternative<RatVector>(s));
  EXPECT_EQ(std::get<RatVector>(s), (RatVector{1, 0}));

  const auto m = rat({{1, 1}, {1, 1}});
  s = solve(m, {1, 2});
  ASSERT_TRUE(std::holds_alternative<Infeasible>(s));
  const auto& y = std::get<Infeasible>(s).certificate;
  EXPECT_EQ(y[0] + y[1], 0);
  EXPECT_NE(y[0] + 2 * y[1], 0);
}

TEST(Linalg, InverseRoundTrip) {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto u = to_rational(unimodular(rng, 4));
    const auto inv = inverse(u);
    ASSERT_TRUE(inv.has_value());
    for (std::size_t i = 0; i < 4; ++i) {
      RatVector col(4);
      for (std::size_t j = 0; j < 4; ++j) col[j] = (*inv)(j, i);
      auto e = multiply(u, col);
      for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(e[j], i == j ? 1 : 0);
    }
  }
  EXPECT_FALSE(inverse(rat({{1, 2}, {2, 4}})).has_value());
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(integer({{2, 0}, {0, 3}})), (IntVector{1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(4)), (IntVector{1, 1, 1, 1}));
  EXPECT_EQ(smith_normal_form(integer({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})), (IntVector{2, 6, 12}));
  EXPECT_EQ(smith_normal_form(integer({{0, 0}, {0, 0}, {0, 0}})), (IntVector{0, 0}));
}

// Elementary divisors: d1 ... dk equals the gcd of the k x k minors.
TEST(Smith, DivisorProductsMatchMinorGcds) {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const auto m = random_int(rng, r, c, -6, 6);
    const auto d = smith_normal_form(m);
    ASSERT_EQ(d.size(), std::min(r, c));
    mpz_class prod = 1;
    for (std::size_t k = 0; k < d.size(); ++k) {
      prod *= d[k];
      EXPECT_EQ(prod, oracle::minors_gcd(as_rows(m), k + 1)) << "k=" << k + 1;
      if (k + 1 < d.size() && d[k] != 0) EXPECT_EQ(d[k + 1] % d[k], 0);
      EXPECT_GE(d[k], 0);
    }
  }
}

TEST(Smith, InvariantUnderUnimodularMultiplication) {
  std::mt19937 rng(5);
  for (int t = 0; t < 25; ++t) {
    const std::size_t r = 2 + rng() % 3, c = 2 + rng() % 3;
    const auto m = random_int(rng, r, c, -5, 5);
    const auto moved = mul(mul(unimodular(rng, r), m), unimodular(rng, c));
    EXPECT_EQ(smith_normal_form(m), smith_normal_form(moved));
  }
}

TEST(LP, FeasiblePoint) {
  // x + y = 1, x, y >= 0.
  auto x = feasible_point(rat({{1, 1}}), {1});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + (*x)[1], 1);
  EXPECT_GE((*x)[0], 0);
  EXPECT_FALSE(feasible_point(rat({{1, 1}}), {-1}).has_value());
  EXPECT_FALSE(feasible_point(rat({{1, -1}, {1, -1}}), {1, 2}).has_value());
}

TEST(LP, SeparatingFunctionalExamples) {
  const auto square = rat({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto f = separating_functional(square, {0, 1}, {2, 3});
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->c, (RatVector{0, -1}));
  EXPECT_EQ(f->delta, 0);
  EXPECT_FALSE(separating_functional(square, {0, 3}, {1, 2}).has_value());

  // A_3 inside B_3 is not a face.
  const auto s3 = testing_support::make_group(3, "(1 2); (1 2 3)");
  const auto pts = permutation_matrix_rows(s3.elements(), 3);
  std::vector<std::size_t> in, out;
  for (std::size_t i = 0; i < s3.order(); ++i) (s3.element(i).order() == 2 ? out : in).push_back(i);
  EXPECT_EQ(in.size(), 3u);
  EXPECT_FALSE(separating_functional(pts, in, out).has_value());

  auto none_inside = separating_functional(square, {}, {0, 1});
  ASSERT_TRUE(none_inside.has_value());
  EXPECT_EQ(none_inside->delta, 1);
  EXPECT_THROW(separating_functional(square, {0}, {0}), Error);
  EXPECT_THROW(separating_functional(square, {9}, {}), Error);
}

// Whenever a functional is returned it is re-checked exactly; whenever none
// is returned, no facet from the hyperplane oracle cuts out exactly the
// inside set (and the set differs from the whole square and from single
// points, which are always faces).
TEST(LP, SeparatingFunctionalAgreesWithFacetOracle) {
  const std::vector<std::pair<std::string, std::size_t>> groups = {
      {"(1 2); (3 4)", 4}, {"(1 2 3)", 3}, {"(1 2); (1 2 3)", 3}, {"(1 2); (3 4); (5 6)", 6}};
  for (const auto& [gens, n] : groups) {
    const auto g = testing_support::make_group(n, gens);
    const auto pts = permutation_matrix_rows(g.elements(), n);
    const auto opts = testing_support::points(g);
    const auto faces = oracle::faces(oracle::facets(opts), static_cast<int>(g.order()));
    const std::size_t m = g.order();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<std::size_t> in, out;
      std::vector<int> face;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1) {
          in.push_back(i);
          face.push_back(static_cast<int>(i));
        } else {
          out.push_back(i);
        }
      }
      const auto f = separating_functional(pts, in, out);
      EXPECT_EQ(f.has_value(), faces.count(face) > 0) << gens << " mask " << mask;
      if (!f) continue;
      for (auto i : in) EXPECT_EQ(dot(f->c, pts.row_vector(i)), f->delta);
      for (auto i : out) EXPECT_LT(dot(f->c, pts.row_vector(i)), f->delta);
      for (const auto& x : f->c) EXPECT_EQ(x.get_den(), 1);
    }
  }
}
