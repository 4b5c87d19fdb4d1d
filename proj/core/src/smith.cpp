#include <algorithm>

#include "permpoly/linalg.hpp"

namespace permpoly {

namespace {

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

IntVector smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t k = std::min(rows, cols);
  IntVector divisors;
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(m(i, j)) == 0) continue;
          if (pr == rows || abs(m(i, j)) < abs(m(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;  // trailing block is zero
      m.swap_rows(t, pr);
      swap_cols(m, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m(i, t)) == 0) continue;
        Integer q = m(i, t) / m(t, t);  // truncating division
        add_row(m, i, t, -q);
        if (sgn(m(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m(t, j)) == 0) continue;
        Integer q = m(t, j) / m(t, t);
        add_col(m, j, t, -q);
        if (sgn(m(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (sgn(m(i, j)) != 0 && !mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            add_row(m, t, i, Integer(1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    divisors.push_back(abs(m(t, t)));
  }
  return divisors;
}

}  // namespace permpoly
