#include "permpoly/linalg.hpp"

#include "permpoly/error.hpp"

namespace permpoly {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  }
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_canonical(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

namespace {

// Gauss-Jordan on the first `pivot_cols` columns; returns pivot columns.
std::vector<std::size_t> eliminate(RatMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    if (m(r, c) != 1) {
      const Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

ReducedRowEchelon rref(RatMatrix m) {
  auto pivots = eliminate(m, m.cols());
  return {std::move(m), std::move(pivots)};
}

std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, std::size_t dim) {
  RatMatrix m = RatMatrix::from_rows(vectors, dim);
  auto reduced = rref(std::move(m));
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < reduced.pivots.size(); ++i) out.push_back(reduced.matrix.row_vector(i));
  return out;
}

RankNullspace rank_nullspace(const RatMatrix& m) {
  auto reduced = rref(m);
  RankNullspace out;
  out.rank = reduced.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : reduced.pivots) is_pivot[c] = true;
  std::vector<RatVector> raw;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < reduced.pivots.size(); ++r) v[reduced.pivots[r]] = -reduced.matrix(r, f);
    raw.push_back(std::move(v));
  }
  if (!raw.empty()) out.nullspace = canonical_basis(raw, m.cols());
  return out;
}

std::size_t integer_rank(IntMatrix m) {
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = m(i, j) * m(r, c) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::variant<RatVector, Infeasible> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length != rows");
  const std::size_t rows = m.rows(), cols = m.cols();
  RatMatrix aug(rows, cols + 1 + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
    aug(i, cols + 1 + i) = 1;
  }
  auto pivots = eliminate(aug, cols);
  for (std::size_t i = pivots.size(); i < rows; ++i) {
    if (sgn(aug(i, cols)) != 0) {
      RatVector y(rows);
      for (std::size_t k = 0; k < rows; ++k) y[k] = aug(i, cols + 1 + k);
      return Infeasible{std::move(y)};
    }
  }
  RatVector x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols);
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = eliminate(aug, n);
  if (pivots.size() != n) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

RatVector multiply(const RatMatrix& m, const RatVector& x) {
  if (x.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "vector length != cols");
  RatVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0) y[i] += m(i, j) * x[j];
    }
  }
  return y;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector primitive_integer(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector primitive_integer(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational t = v[i] * l;
    scaled[i] = t.get_num();
  }
  return primitive_integer(scaled);
}

}  // namespace permpoly
