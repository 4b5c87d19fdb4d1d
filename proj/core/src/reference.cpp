#include "permpoly/reference.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "permpoly/constructors.hpp"
#include "permpoly/error.hpp"
#include "permpoly/group.hpp"

#include "table2_data.inc"

namespace permpoly {

namespace {

struct Expr {
  std::string head;
  std::vector<std::string> args;  // raw argument text
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

Expr parse(std::string_view text) {
  const std::string s = trim(text);
  Expr e;
  const auto open = s.find('(');
  if (open == std::string::npos) {
    e.head = s;
    return e;
  }
  if (s.back() != ')') throw Error(ErrorCode::SyntaxError, "unbalanced name: " + s);
  e.head = trim(std::string_view(s).substr(0, open));
  int depth = 0;
  std::string cur;
  for (std::size_t i = open + 1; i + 1 < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw Error(ErrorCode::SyntaxError, "unbalanced name: " + s);
    if (c == ',' && depth == 0) {
      e.args.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw Error(ErrorCode::SyntaxError, "unbalanced name: " + s);
  e.args.push_back(trim(cur));
  return e;
}

std::size_t as_int(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorCode::SyntaxError, "expected an integer, got '" + s + "'");
  }
  return std::stoul(s);
}

void arity(const Expr& e, std::size_t n) {
  if (e.args.size() != n) throw Error(ErrorCode::SyntaxError, e.head + " takes " + std::to_string(n) + " argument(s)");
}

RatMatrix rows_to_matrix(const std::vector<std::vector<int>>& rows, std::size_t dim) {
  RatMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

VPolytope simplex_coords(std::size_t d) {
  std::vector<std::vector<int>> rows(d + 1, std::vector<int>(d, 0));
  for (std::size_t i = 0; i < d; ++i) rows[i + 1][i] = 1;
  return VPolytope(rows_to_matrix(rows, d));
}

VPolytope cube_coords(std::size_t d) {
  std::vector<std::vector<int>> rows;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<int> r(d);
    for (std::size_t k = 0; k < d; ++k) r[k] = (mask >> (d - 1 - k)) & 1;
    rows.push_back(r);
  }
  return VPolytope(rows_to_matrix(rows, d));
}

VPolytope cross_coords(std::size_t d) {
  std::vector<std::vector<int>> rows;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<int> r(d, 0);
    r[k] = 1;
    rows.push_back(r);
    r[k] = -1;
    rows.push_back(r);
  }
  return VPolytope(rows_to_matrix(rows, d));
}

VPolytope hypersimplex_coords(std::size_t n, std::size_t k) {
  std::vector<std::vector<int>> rows;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<int> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = (mask >> (n - 1 - i)) & 1;
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end());
  return VPolytope(rows_to_matrix(rows, n));
}

VPolytope birkhoff_coords(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  std::vector<std::vector<int>> rows;
  do {
    std::vector<int> r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) r[images[i] * n + i] = 1;
    rows.push_back(r);
  } while (std::next_permutation(images.begin(), images.end()));
  return VPolytope(rows_to_matrix(rows, n * n));
}

std::optional<VPolytope> coords(const Expr& e) {
  const auto& h = e.head;
  if (e.args.empty()) {
    if (h == "point") return simplex_coords(0);
    if (h == "segment") return simplex_coords(1);
    if (h == "triangle") return simplex_coords(2);
    if (h == "square") return cube_coords(2);
    if (h == "tetrahedron") return simplex_coords(3);
    if (h == "cube") return cube_coords(3);
    if (h == "octahedron") return cross_coords(3);
    if (h == "square_pyramid") {
      return VPolytope(rows_to_matrix({{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {0, 0, 1}}, 3));
    }
    if (h == "triangular_prism") {
      return VPolytope(rows_to_matrix({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}}, 3));
    }
    return std::nullopt;
  }
  if (h == "simplex") return (arity(e, 1), simplex_coords(as_int(e.args[0])));
  if (h == "cube") return (arity(e, 1), cube_coords(as_int(e.args[0])));
  if (h == "crosspolytope") return (arity(e, 1), cross_coords(as_int(e.args[0])));
  if (h == "birkhoff") return (arity(e, 1), birkhoff_coords(as_int(e.args[0])));
  if (h == "hypersimplex") {
    arity(e, 2);
    const auto n = as_int(e.args[0]), k = as_int(e.args[1]);
    if (k > n) throw Error(ErrorCode::UnknownName, "hypersimplex needs k <= n");
    return hypersimplex_coords(n, k);
  }
  return std::nullopt;
}

bool is_combinatorial_only(const Expr& e) {
  static const char* kHeads[] = {"pyramid", "prism", "bipyramid", "dual", "product", "free_sum", "table2"};
  if (e.args.empty()) return e.head == "wedge_W" || e.head == "dual_W" || e.head == "wedge_octahedron_facet";
  return std::any_of(std::begin(kHeads), std::end(kHeads), [&](const char* k) { return e.head == k; });
}

std::vector<Table2Entry> parse_table2(const char* text) {
  std::vector<Table2Entry> out;
  std::istringstream in(text);
  std::string line;
  Table2Entry* cur = nullptr;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line == "end") {
      cur = nullptr;
      continue;
    }
    if (line[0] == '[') {
      if (!cur || line.back() != ']') throw Error(ErrorCode::SyntaxError, "bad table2 line: " + line);
      std::istringstream row(line.substr(1, line.size() - 2));
      std::vector<std::size_t> facet;
      std::size_t v;
      while (row >> v) facet.push_back(v);
      for (auto x : facet) cur->num_vertices = std::max(cur->num_vertices, x + 1);
      cur->facets.push_back(std::move(facet));
      continue;
    }
    std::istringstream head(line);
    Table2Entry e;
    e.num_vertices = 0;
    head >> e.name;
    std::size_t f;
    while (head >> f) e.expected_f_vector.push_back(f);
    out.push_back(std::move(e));
    cur = &out.back();
  }
  return out;
}

}  // namespace

const std::vector<Table2Entry>& table2_entries() {
  static const std::vector<Table2Entry> entries = parse_table2(kTable2Data);
  return entries;
}

std::optional<VPolytope> reference_vpolytope(std::string_view name) {
  const Expr e = parse(name);
  if (auto p = coords(e)) return p;
  if (is_combinatorial_only(e)) return std::nullopt;
  throw Error(ErrorCode::UnknownName, "unknown polytope '" + std::string(name) + "'");
}

FaceLattice reference_lattice(std::string_view name) {
  const Expr e = parse(name);
  if (auto p = coords(e)) return face_lattice(*p);
  const auto& h = e.head;
  if (e.args.empty()) {
    if (h == "wedge_W") {
      // Wedge over the base edge {0, 1} of the square pyramid.
      const auto sp = reference_lattice("square_pyramid");
      return wedge(sp, VertexSet::from_indices(sp.num_vertices(), {0, 1}));
    }
    if (h == "dual_W") return dual(reference_lattice("wedge_W"));
    if (h == "wedge_octahedron_facet") {
      const auto o = reference_lattice("octahedron");
      return wedge(o, o.facets().front());
    }
  } else if (h == "table2") {
    arity(e, 1);
    for (const auto& t : table2_entries()) {
      if (t.name == e.args[0]) return FaceLattice::from_facets(t.num_vertices, t.facets);
    }
  } else if (h == "pyramid") {
    return (arity(e, 1), pyramid(reference_lattice(e.args[0])));
  } else if (h == "prism") {
    return (arity(e, 1), prism(reference_lattice(e.args[0])));
  } else if (h == "bipyramid") {
    return (arity(e, 1), bipyramid(reference_lattice(e.args[0])));
  } else if (h == "dual") {
    return (arity(e, 1), dual(reference_lattice(e.args[0])));
  } else if (h == "product") {
    arity(e, 2);
    return product(reference_lattice(e.args[0]), reference_lattice(e.args[1]));
  } else if (h == "free_sum") {
    arity(e, 2);
    return free_sum(reference_lattice(e.args[0]), reference_lattice(e.args[1]));
  }
  throw Error(ErrorCode::UnknownName, "unknown polytope '" + std::string(name) + "'");
}

}  // namespace permpoly
