#include "permpoly/central_symmetry.hpp"

#include <algorithm>

#include "permpoly/error.hpp"

namespace permpoly {

std::vector<F2Vector> f2_rref(std::vector<F2Vector> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][c]) {
        for (std::size_t k = 0; k < cols; ++k) rows[i][k] ^= rows[r][k];
      }
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool F2Subspace::contains(const F2Vector& v) const {
  auto rows = basis;
  rows.push_back(v);
  return f2_rref(std::move(rows)).size() == basis.size();
}

std::optional<F2Subspace> central_symmetry_data(const PermutationGroup& group) {
  for (const auto& g0 : group.elements()) {
    if (subelements(g0, group).size() != group.order()) continue;
    const auto dec = cycle_decomposition(g0);
    for (const auto& c : dec.cycles) {
      if (c.entries.size() != 2) return std::nullopt;
    }
    F2Subspace out;
    out.r = dec.cycles.size();
    out.g0 = g0;
    out.cycles = dec.cycles;
    std::vector<F2Vector> rows;
    for (const auto& h : group.elements()) {
      if (h.order() > 2) return std::nullopt;
      F2Vector v(out.r, 0);
      for (std::size_t i = 0; i < out.r; ++i) v[i] = h(out.cycles[i].entries[0]) != out.cycles[i].entries[0];
      rows.push_back(std::move(v));
    }
    out.basis = f2_rref(std::move(rows));
    if ((std::size_t{1} << out.basis.size()) != group.order()) return std::nullopt;
    return out;
  }
  return std::nullopt;
}

PermutationGroup free_sum_double(const PermutationGroup& group) {
  const auto data = central_symmetry_data(group);
  if (!data) throw Error(ErrorCode::NotCentrallySymmetric, "P(G) is not centrally symmetric");
  const std::size_t r = data->r, degree = 4 * r;
  auto from_f2 = [&](const F2Vector& v) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
    for (std::size_t j = 0; j < 2 * r; ++j) {
      if (v[j]) std::swap(images[2 * j], images[2 * j + 1]);
    }
    return Permutation::from_images(std::move(images));
  };
  std::vector<Permutation> gens;
  for (const auto& b : data->basis) {
    F2Vector v(2 * r, 0);
    for (std::size_t j = 0; j < r; ++j) v[j] = v[r + j] = b[j];
    gens.push_back(from_f2(v));
  }
  F2Vector top(2 * r, 0);
  for (std::size_t j = r; j < 2 * r; ++j) top[j] = 1;
  gens.push_back(from_f2(top));
  return PermutationGroup::generate(std::move(gens), degree);
}

}  // namespace permpoly
