#include "permpoly/json.hpp"

#include <string>

#include "permpoly/central_symmetry.hpp"
#include "permpoly/perm_polytope.hpp"
#include "permpoly/representation.hpp"

namespace permpoly {

Json to_json(const FaceLattice& l) {
  Json j;
  j["dim"] = l.dim();
  j["f_vector"] = l.f_vector();
  Json facets = Json::array();
  for (const auto& f : l.facets()) facets.push_back(f.indices());
  j["facets"] = std::move(facets);
  Json by_dim = Json::object();
  for (const auto& face : l.faces()) {
    auto& slot = by_dim[std::to_string(face.dim)];
    if (slot.is_null()) slot = Json::array();
    slot.push_back(face.vertices.indices());
  }
  j["faces_by_dim"] = std::move(by_dim);
  return j;
}

Json group_report(const PermutationGroup& g) {
  const auto p = build(g);
  const auto lattice = face_lattice(p.vpoly);
  const auto edges = edge_graph(g);
  Json j;
  j["degree"] = g.degree();
  Json gens = Json::array();
  for (const auto& s : g.generators()) gens.push_back(format_cycles(s));
  j["generators"] = std::move(gens);
  j["order"] = g.order();
  j["dim"] = p.dim();
  j["f_vector"] = lattice.f_vector();
  j["vertex_degree"] = edges.degree;
  j["kernel_dim"] = affine_kernel(g).dim();
  j["simplex"] = p.dim() + 1 == g.order();
  j["centrally_symmetric"] = central_symmetry_data(g).has_value();
  j["origin_in_affine_hull"] = origin_in_affine_hull(p);
  j["face_lattice"] = to_json(lattice);
  return j;
}

Json to_json(const Table1Report& r, bool timings) {
  Json j;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["type"] = row.type_name;
    x["order"] = row.order;
    x["dim"] = row.dim;
    x["f_vector"] = row.f_vector;
    x["reference_f_vector"] = row.reference_f_vector;
    x["lattice_matches"] = row.lattice_matches;
    x["isomorphism_type_matches"] = row.isomorphism_type_matches;
    x["pass"] = row.pass;
    if (timings) x["seconds"] = row.seconds;
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  Json matrix = Json::array();
  for (const auto& line : r.effective) {
    Json l = Json::array();
    for (bool b : line) l.push_back(b ? 1 : 0);
    matrix.push_back(std::move(l));
  }
  j["effective_equivalence"] = std::move(matrix);
  Json pairs = Json::array();
  for (const auto& p : r.same_type_pairs) {
    pairs.push_back({{"rows", {p.a, p.b}},
                     {"affinely_equivalent", p.affinely_equivalent},
                     {"groups_isomorphic", p.groups_isomorphic}});
  }
  j["same_type_pairs"] = std::move(pairs);
  j["matrix_is_identity"] = r.matrix_is_identity;
  j["pass"] = r.pass;
  if (timings) j["seconds"] = r.seconds;
  return j;
}

Json to_json(const Table2Result& r) {
  Json j;
  j["name"] = r.name;
  j["f_vector"] = r.f_vector;
  j["expected_f_vector"] = r.expected_f_vector;
  j["euler"] = r.euler;
  j["complement_property"] = r.complement_property;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const FaceCaseResult& r, bool timings) {
  Json j;
  j["name"] = r.name;
  j["order"] = r.order;
  j["expected_order"] = r.expected_order;
  j["face_vertices"] = r.face_vertices;
  j["dim"] = r.dim;
  j["expected_dim"] = r.expected_dim;
  j["f_vector"] = r.f_vector;
  j["target_f_vector"] = r.target_f_vector;
  j["is_face"] = r.is_face;
  j["isomorphic"] = r.isomorphic;
  j["pass"] = r.pass;
  if (timings) j["seconds"] = r.seconds;
  return j;
}

Json classification_report(const Table1Report* table1, const std::vector<Table2Result>* table2,
                           const std::vector<FaceCaseResult>* cases, bool timings) {
  Json j = Json::object();
  bool pass = true;
  if (table1) {
    j["table1"] = to_json(*table1, timings);
    pass = pass && table1->pass;
  }
  if (table2) {
    Json t = Json::array();
    for (const auto& r : *table2) {
      t.push_back(to_json(r));
      pass = pass && r.pass;
    }
    j["table2"] = std::move(t);
  }
  if (cases) {
    Json c = Json::array();
    for (const auto& r : *cases) {
      c.push_back(to_json(r, timings));
      pass = pass && r.pass;
    }
    j["face_cases"] = std::move(c);
  }
  j["pass"] = pass;
  return j;
}

}  // namespace permpoly
