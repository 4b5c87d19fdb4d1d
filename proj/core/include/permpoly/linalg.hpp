#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "permpoly/matrix.hpp"

namespace permpoly {

struct ReducedRowEchelon {
  RatMatrix matrix;                // same shape as the input; rows past rank are zero
  std::vector<std::size_t> pivots; // pivot column of each nonzero row, ascending
};

ReducedRowEchelon rref(RatMatrix m);

struct RankNullspace {
  std::size_t rank = 0;
  /// Canonical basis of the null space: the nonzero rows of its reduced row
  /// echelon form, so equal subspaces have identical bases.
  std::vector<RatVector> nullspace;
};

RankNullspace rank_nullspace(const RatMatrix& m);

/// Nonzero rows of the RREF of the matrix whose rows are `vectors`.
std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, std::size_t dim);

/// Rank over Q via fraction-free (Bareiss) elimination.
std::size_t integer_rank(IntMatrix m);

/// y with y*M = 0 and y.b != 0.
struct Infeasible {
  RatVector certificate;
};

/// Returns some x with M x = b (free variables set to zero, pivots in
/// column order) or an infeasibility certificate. Throws DimensionMismatch.
std::variant<RatVector, Infeasible> solve(const RatMatrix& m, const RatVector& b);

/// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Elementary divisors d1 | d2 | ... (nonnegative, min(rows, cols) entries,
/// zeros last).
IntVector smith_normal_form(IntMatrix m);

RatVector multiply(const RatMatrix& m, const RatVector& x);
Rational dot(const RatVector& a, const RatVector& b);

/// Scales a nonzero rational vector by a positive factor into a primitive
/// integer vector (gcd of entries 1). The zero vector is returned unchanged.
IntVector primitive_integer(const RatVector& v);
IntVector primitive_integer(const IntVector& v);

bool is_canonical(const Rational& q);

}  // namespace permpoly
