#include "permpoly/classify.hpp"

#include <chrono>
#include <sstream>

#include "permpoly/constructions.hpp"
#include "permpoly/error.hpp"
#include "permpoly/face_lattice.hpp"
#include "permpoly/group_file.hpp"
#include "permpoly/group_isomorphism.hpp"
#include "permpoly/lattice_isomorphism.hpp"
#include "permpoly/perm_polytope.hpp"
#include "permpoly/reference.hpp"
#include "permpoly/representation.hpp"

namespace permpoly {

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {"triangle", "triangle", "Z/3", 3, {"(1 2 3)"}, false},
      {"square", "square", "(Z/2)^2", 4, {"(1 2)", "(3 4)"}, true},
      {"tetrahedron", "tetrahedron", "Z/4", 4, {"(1 2 3 4)"}, false},
      {"tetrahedron", "tetrahedron", "(Z/2)^2", 4, {"(1 2)(3 4)", "(1 3)(2 4)"}, false},
      {"triangular prism", "triangular_prism", "Z/6", 5, {"(1 2)", "(3 4 5)"}, true},
      {"cube", "cube", "(Z/2)^3", 6, {"(1 2)", "(3 4)", "(5 6)"}, true},
      {"4-simplex", "simplex(4)", "Z/5", 5, {"(1 2 3 4 5)"}, false},
      {"B_3", "free_sum(triangle,triangle)", "S3", 3, {"(1 2)", "(1 2 3)"}, false},
      {"prism over tetrahedron", "prism(tetrahedron)", "Z/2 x Z/4", 6, {"(1 2 3 4)", "(5 6)"}, true},
      {"prism over tetrahedron", "prism(tetrahedron)", "(Z/2)^3", 6, {"(1 2)(3 4)", "(1 3)(2 4)", "(5 6)"}, true},
      {"4-crosspolytope", "crosspolytope(4)", "(Z/2)^3", 8, {"(1 2)(3 4)", "(3 4)(7 8)", "(5 6)(7 8)"}, false},
      {"product of triangles", "product(triangle,triangle)", "(Z/3)^2", 6, {"(1 2 3)", "(4 5 6)"}, true},
      {"prism over triang. prism", "prism(triangular_prism)", "Z/6 x Z/2", 7, {"(1 2)", "(3 4 5)", "(6 7)"}, true},
      {"4-cube", "cube(4)", "(Z/2)^4", 8, {"(1 2)", "(3 4)", "(5 6)", "(7 8)"}, true},
  };
  return rows;
}

PermutationGroup table1_group(const Table1Row& row) {
  std::vector<Permutation> gens;
  for (const auto& g : row.generators) gens.push_back(parse_cycles(g, row.degree));
  return PermutationGroup::generate(std::move(gens), row.degree);
}

namespace {

PermutationGroup cyclic(std::size_t k) {
  std::vector<Point> images(k);
  for (std::size_t i = 0; i < k; ++i) images[i] = static_cast<Point>((i + 1) % k);
  return PermutationGroup::generate({Permutation::from_images(std::move(images))}, k);
}

PermutationGroup factor_from_label(std::string f) {
  if (f == "S3") return PermutationGroup::generate({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}, 3);
  std::size_t power = 1;
  if (f.size() > 2 && f.front() == '(') {
    const auto close = f.find(")^");
    if (close == std::string::npos) throw Error(ErrorCode::UnknownName, "bad label " + f);
    power = std::stoul(f.substr(close + 2));
    f = f.substr(1, close - 1);
  }
  if (f.size() < 3 || f.substr(0, 2) != "Z/") throw Error(ErrorCode::UnknownName, "bad label " + f);
  const std::size_t k = std::stoul(f.substr(2));
  PermutationGroup g = cyclic(k);
  for (std::size_t i = 1; i < power; ++i) g = embed_product(g, cyclic(k), EmbedMode::Disjoint);
  return g;
}

}  // namespace

PermutationGroup group_from_label(const std::string& label) {
  std::optional<PermutationGroup> g;
  std::size_t start = 0;
  while (true) {
    const auto pos = label.find(" x ", start);
    auto f = factor_from_label(label.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    g = g ? embed_product(*g, f, EmbedMode::Disjoint) : std::move(f);
    if (pos == std::string::npos) break;
    start = pos + 3;
  }
  return *g;
}

Table1Report verify_table1() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  Table1Report report;
  const auto& rows = table1_rows();
  std::vector<PermutationGroup> groups;
  std::vector<PermPolytope> polys;
  for (const auto& row : rows) {
    const auto t = clock::now();
    Table1RowResult r;
    r.type_name = row.type_name;
    groups.push_back(table1_group(row));
    polys.push_back(build(groups.back()));
    const auto& p = polys.back();
    r.order = groups.back().order();
    r.dim = p.dim();
    const auto lattice = face_lattice(p.vpoly);
    const auto ref = reference_lattice(row.reference);
    r.f_vector = lattice.f_vector();
    r.reference_f_vector = ref.f_vector();
    r.lattice_matches = combinatorially_isomorphic(lattice, ref).has_value();
    r.isomorphism_type_matches = are_isomorphic(groups.back(), group_from_label(row.isomorphism_type));
    r.pass = r.dim <= 4 && r.lattice_matches && r.isomorphism_type_matches;
    r.seconds = std::chrono::duration<double>(clock::now() - t).count();
    report.rows.push_back(std::move(r));
  }

  const std::size_t n = rows.size();
  report.effective.assign(n, std::vector<bool>(n, false));
  report.matrix_is_identity = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) {
        report.effective[i][j] = report.effective[j][i];
      } else {
        report.effective[i][j] = effectively_equivalent(groups[i], groups[j]).has_value();
      }
      if (report.effective[i][j] != (i == j)) report.matrix_is_identity = false;
    }
  }
  bool pairs_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i].type_name != rows[j].type_name) continue;
      Table1Report::Pair pr{i, j, affinely_equivalent(polys[i].vpoly, polys[j].vpoly).has_value(),
                            are_isomorphic(groups[i], groups[j])};
      pairs_ok = pairs_ok && pr.affinely_equivalent && !pr.groups_isomorphic;
      report.same_type_pairs.push_back(pr);
    }
  }
  report.pass = report.matrix_is_identity && pairs_ok;
  for (const auto& r : report.rows) report.pass = report.pass && r.pass;
  report.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return report;
}

std::vector<Table2Result> verify_table2() {
  std::vector<Table2Result> out;
  for (const auto& t : table2_entries()) {
    Table2Result r;
    r.name = t.name;
    const auto l = FaceLattice::from_facets(t.num_vertices, t.facets);
    r.f_vector = l.f_vector();
    r.expected_f_vector = t.expected_f_vector;
    r.euler = l.euler_holds();
    r.complement_property = facet_complement_failures(l).empty();
    r.pass = r.euler && r.f_vector == r.expected_f_vector;
    out.push_back(std::move(r));
  }
  return out;
}

PermutationGroup canonical_group(std::string_view kind) {
  const auto open = kind.find('(');
  if (open == std::string_view::npos || kind.back() != ')')
    throw Error(ErrorCode::SyntaxError, "expected kind(argument): " + std::string(kind));
  const std::string head(kind.substr(0, open));
  const std::string arg(kind.substr(open + 1, kind.size() - open - 2));
  auto number = [&] {
    std::size_t pos = 0, value = 0;
    try {
      value = std::stoul(arg, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != arg.size()) throw Error(ErrorCode::SyntaxError, "expected a number: " + arg);
    return value;
  };
  if (head == "cube") return cube_group(number());
  if (head == "crosspolytope") return crosspolytope_group(number());
  if (head == "regular") return regular_representation(group_from_label(arg));
  if (head == "table1") {
    const auto row = number();
    if (row == 0 || row > table1_rows().size())
      throw Error(ErrorCode::UnknownName, "no Table 1 row " + arg);
    return table1_group(table1_rows()[row - 1]);
  }
  throw Error(ErrorCode::UnknownName, "unknown group kind: " + head);
}

}  // namespace permpoly
