#pragma once

#include <nlohmann/json.hpp>

#include "permpoly/classify.hpp"
#include "permpoly/face_cases.hpp"
#include "permpoly/face_lattice.hpp"
#include "permpoly/group.hpp"

namespace permpoly {

using Json = nlohmann::ordered_json;

/// {"dim", "f_vector", "facets", "faces_by_dim"}; vertex indices refer to
/// the canonical element order.
Json to_json(const FaceLattice& l);

/// Per-group report: degree, order, generators, dim, f_vector, vertex
/// degree and flags.
Json group_report(const PermutationGroup& g);

/// Timings are left out unless requested, so repeated runs give identical
/// output.
Json to_json(const Table1Report& r, bool timings = false);
Json to_json(const Table2Result& r);
Json to_json(const FaceCaseResult& r, bool timings = false);

Json classification_report(const Table1Report* table1, const std::vector<Table2Result>* table2,
                           const std::vector<FaceCaseResult>* cases, bool timings = false);

}  // namespace permpoly
