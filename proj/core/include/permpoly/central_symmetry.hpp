#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "permpoly/group.hpp"

namespace permpoly {

using F2Vector = std::vector<std::uint8_t>;

/// The subspace {I : z_I in G} of F2^r for a centrally symmetric P(G), where
/// g0 = z_1 ... z_r is the vertex opposite to e.
struct F2Subspace {
  std::size_t r = 0;
  Permutation g0;
  std::vector<Cycle> cycles;      // z_1..z_r, ordered by smallest point
  std::vector<F2Vector> basis;    // reduced row echelon form over F2

  std::size_t dim() const noexcept { return basis.size(); }
  bool contains(const F2Vector& v) const;
};

/// Row-reduces vectors over F2, returning the nonzero rows.
std::vector<F2Vector> f2_rref(std::vector<F2Vector> rows);

/// Some g0 with subelements(g0, G) == G (first in canonical order), and the
/// induced subspace; nullopt when there is none.
std::optional<F2Subspace> central_symmetry_data(const PermutationGroup& group);

/// Group on 4r points realizing {(I,I)} u {(I,[r]-I)} with 2-cycles
/// (2j-1 2j); its polytope is the free sum of P(G) with itself.
/// Throws NotCentrallySymmetric.
PermutationGroup free_sum_double(const PermutationGroup& group);

}  // namespace permpoly
