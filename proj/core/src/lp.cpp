#include "permpoly/lp.hpp"

#include <algorithm>

#include "permpoly/error.hpp"
#include "permpoly/linalg.hpp"

namespace permpoly {

std::optional<RatVector> feasible_point(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length != rows");
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 0) return RatVector(n);

  // Tableau columns: n structural, m artificial, then rhs. The last row is
  // the phase-one objective (sum of artificials) in reduced form.
  const std::size_t width = n + m + 1;
  RatMatrix t(m + 1, width);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    t(i, n + i) = 1;
    t(i, width - 1) = flip ? Rational(-b[i]) : b[i];
  }
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < n + m) continue;
    for (std::size_t i = 0; i < m; ++i) t(m, j) -= t(i, j);
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  Rational ratio, best;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (sgn(t(m, j)) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t(i, enter)) <= 0) continue;
      ratio = t(i, width - 1) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (leave == m) break;

    const Rational inv = 1 / t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(t(leave, j)) != 0) t(leave, j) *= inv;
    }
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(t(i, enter)) == 0) continue;
      const Rational f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(t(leave, j)) != 0) t(i, j) -= f * t(leave, j);
      }
    }
    basis[leave] = enter;
  }

  if (sgn(t(m, width - 1)) != 0) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t(i, width - 1);
  }
  return x;
}

std::optional<Functional> separating_functional(const RatMatrix& points,
                                                const std::vector<std::size_t>& inside,
                                                const std::vector<std::size_t>& outside) {
  const std::size_t dim = points.cols();
  for (auto i : inside) {
    if (i >= points.rows()) throw Error(ErrorCode::DimensionMismatch, "inside index out of range");
  }
  for (auto j : outside) {
    if (j >= points.rows()) throw Error(ErrorCode::DimensionMismatch, "outside index out of range");
    if (std::find(inside.begin(), inside.end(), j) != inside.end()) {
      throw Error(ErrorCode::InvalidArgument, "inside and outside overlap");
    }
  }
  if (inside.empty()) return Functional{RatVector(dim), Rational(1)};
  if (outside.empty()) return Functional{RatVector(dim), Rational(0)};

  // c ranges over the vectors orthogonal to every inside difference.
  const std::size_t x0 = inside.front();
  RatMatrix diffs(inside.size() - 1, dim);
  for (std::size_t r = 1; r < inside.size(); ++r) {
    for (std::size_t k = 0; k < dim; ++k) diffs(r - 1, k) = points(inside[r], k) - points(x0, k);
  }
  const auto basis = rank_nullspace(diffs).nullspace;
  if (basis.empty()) return std::nullopt;
  const std::size_t kk = basis.size();

  // y = u - w free; c = sum y_t basis_t; c.(x0 - x_j) - s_j = 1.
  RatMatrix a(outside.size(), 2 * kk + outside.size());
  RatVector b(outside.size(), Rational(1));
  for (std::size_t r = 0; r < outside.size(); ++r) {
    for (std::size_t t = 0; t < kk; ++t) {
      Rational v = 0;
      for (std::size_t k = 0; k < dim; ++k) v += basis[t][k] * (points(x0, k) - points(outside[r], k));
      a(r, t) = v;
      a(r, kk + t) = -v;
    }
    a(r, 2 * kk + r) = -1;
  }
  const auto sol = feasible_point(a, b);
  if (!sol) return std::nullopt;

  RatVector c(dim);
  for (std::size_t t = 0; t < kk; ++t) {
    const Rational y = (*sol)[t] - (*sol)[kk + t];
    if (sgn(y) == 0) continue;
    for (std::size_t k = 0; k < dim; ++k) c[k] += y * basis[t][k];
  }
  // c is nonzero here: every outside row forces c.(x0 - x_j) >= 1.
  Functional f;
  f.c = to_rational(primitive_integer(c));
  Rational delta = 0;
  for (std::size_t k = 0; k < dim; ++k) delta += f.c[k] * points(x0, k);
  f.delta = delta;
  return f;
}

}  // namespace permpoly
