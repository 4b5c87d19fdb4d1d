#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "permpoly/central_symmetry.hpp"
#include "permpoly/classify.hpp"
#include "permpoly/constructions.hpp"
#include "permpoly/error.hpp"
#include "permpoly/face_cases.hpp"
#include "permpoly/face_lattice.hpp"
#include "permpoly/group_file.hpp"
#include "permpoly/group_isomorphism.hpp"
#include "permpoly/invariants.hpp"
#include "permpoly/json.hpp"
#include "permpoly/lattice_isomorphism.hpp"
#include "permpoly/perm_polytope.hpp"
#include "permpoly/representation.hpp"

namespace permpoly::cli {
namespace {

struct GroupArgs {
  std::size_t degree = 0;
  std::string generators;
};

void add_group_options(CLI::App* app, GroupArgs& g, const std::string& suffix = "") {
  const std::string n = suffix.empty() ? "-n,--degree" : "--n" + suffix;
  const std::string gens = suffix.empty() ? "-g,--generators" : "--g" + suffix;
  app->add_option(n, g.degree, "degree")->required();
  app->add_option(gens, g.generators, "semicolon-separated cycle expressions")->required();
}

PermutationGroup make_group(const GroupArgs& g) {
  return generate({g.degree, parse_generator_list(g.generators, g.degree)});
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join_generators(const PermutationGroup& g) {
  std::string s;
  for (const auto& x : g.generators()) s += (s.empty() ? "" : "; ") + format_cycles(x);
  return s;
}

std::string group_line(const PermutationGroup& g) {
  std::string s = "n=" + std::to_string(g.degree());
  for (const auto& x : g.generators()) s += "; " + format_cycles(x);
  return s;
}

Json group_json(const PermutationGroup& g) {
  Json j;
  j["degree"] = g.degree();
  Json gens = Json::array();
  for (const auto& x : g.generators()) gens.push_back(format_cycles(x));
  j["generators"] = std::move(gens);
  j["order"] = g.order();
  return j;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::OutOfRange:
    case ErrorCode::RepeatedPoint:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownName:
    case ErrorCode::NotAMember:
    case ErrorCode::IdentityInput:
      return true;
    default:
      return false;
  }
}

int cmd_polytope(const GroupArgs& ga, bool json, std::ostream& out) {
  const auto g = make_group(ga);
  auto r = group_report(g);
  if (json) {
    out << r.dump(2) << '\n';
    return 0;
  }
  out << "degree " << g.degree() << '\n'
      << "generators " << join_generators(g) << '\n'
      << "order " << g.order() << '\n'
      << "dim " << r["dim"].get<std::size_t>() << '\n'
      << "f_vector " << join(r["f_vector"].get<std::vector<std::size_t>>()) << '\n'
      << "vertex_degree " << r["vertex_degree"].get<std::size_t>() << '\n'
      << "kernel_dim " << r["kernel_dim"].get<std::size_t>() << '\n'
      << "simplex " << yes_no(r["simplex"].get<bool>()) << '\n'
      << "centrally_symmetric " << yes_no(r["centrally_symmetric"].get<bool>()) << '\n'
      << "origin_in_affine_hull " << yes_no(r["origin_in_affine_hull"].get<bool>()) << '\n';
  return 0;
}

int cmd_face(const GroupArgs& ga, const std::string& subset, bool json, std::ostream& out) {
  const auto g = make_group(ga);
  const auto s = parse_element_list(subset, g.degree());
  const auto face = face_from_subset(g, s);
  const auto p = build(g);
  const bool face_ok = is_face(p.vpoly, face);
  std::vector<Permutation> elems;
  for (auto i : face) elems.push_back(g.element(i));
  const VPolytope fp(permutation_matrix_rows(elems, g.degree()));
  const auto lattice = face_lattice(fp);
  if (json) {
    Json j;
    j["group"] = group_json(g);
    Json e = Json::array();
    for (const auto& x : elems) e.push_back(format_element(x));
    j["elements"] = std::move(e);
    j["indices"] = face;
    j["dim"] = fp.dim();
    j["f_vector"] = lattice.f_vector();
    j["is_face"] = face_ok;
    out << j.dump(2) << '\n';
  } else {
    out << "vertices " << face.size() << '\n';
    for (const auto& x : elems) out << "  " << format_element(x) << '\n';
    out << "dim " << fp.dim() << '\n'
        << "f_vector " << join(lattice.f_vector()) << '\n'
        << "is_face " << yes_no(face_ok) << '\n';
  }
  return face_ok ? 0 : 1;
}

int cmd_equiv(const GroupArgs& a, const GroupArgs& b, bool json, std::ostream& out) {
  const auto g1 = make_group(a);
  const auto g2 = make_group(b);
  const auto p1 = build(g1);
  const auto p2 = build(g2);
  const bool iso = are_isomorphic(g1, g2);
  const auto eff = iso ? effectively_equivalent(g1, g2) : std::nullopt;
  const bool same_size = p1.vpoly.num_vertices() == p2.vpoly.num_vertices() && p1.dim() == p2.dim();
  const bool affine = same_size && affinely_equivalent(p1.vpoly, p2.vpoly).has_value();
  const bool comb =
      same_size && combinatorially_isomorphic(face_lattice(p1.vpoly), face_lattice(p2.vpoly)).has_value();
  std::vector<std::string> witness;
  if (eff)
    for (const auto& x : g1.generators())
      witness.push_back(format_element(g2.element(eff->image[g1.index_or_throw(x)])));
  if (json) {
    Json j;
    j["first"] = group_json(g1);
    j["second"] = group_json(g2);
    j["isomorphic"] = iso;
    j["effectively_equivalent"] = eff.has_value();
    if (eff) j["witness"] = witness;
    j["affinely_equivalent"] = affine;
    j["combinatorially_isomorphic"] = comb;
    out << j.dump(2) << '\n';
  } else {
    out << "isomorphic " << yes_no(iso) << '\n'
        << "effectively_equivalent " << yes_no(eff.has_value()) << '\n';
    if (eff) {
      out << "witness";
      for (std::size_t i = 0; i < witness.size(); ++i)
        out << (i ? "; " : " ") << format_element(g1.generators()[i]) << " -> " << witness[i];
      out << '\n';
    }
    out << "affinely_equivalent " << yes_no(affine) << '\n'
        << "combinatorially_isomorphic " << yes_no(comb) << '\n';
  }
  return 0;
}

int cmd_classify(bool t1, bool t2, bool faces, const std::vector<std::string>& cases, bool json,
                 bool timings, std::ostream& out) {
  if (!t1 && !t2 && !faces && cases.empty()) t1 = t2 = faces = true;
  std::optional<Table1Report> r1;
  std::optional<std::vector<Table2Result>> r2;
  std::optional<std::vector<FaceCaseResult>> r3;
  bool pass = true;
  if (t1) {
    r1 = verify_table1();
    pass = pass && r1->pass;
  }
  if (t2) {
    r2 = verify_table2();
    for (const auto& r : *r2) pass = pass && r.pass;
  }
  if (faces || !cases.empty()) {
    r3.emplace();
    const auto& names = cases.empty() ? face_case_names() : cases;
    for (const auto& n : names) {
      r3->push_back(verify_face_case(build_face_case(n)));
      pass = pass && r3->back().pass;
    }
  }
  if (json) {
    out << classification_report(r1 ? &*r1 : nullptr, r2 ? &*r2 : nullptr, r3 ? &*r3 : nullptr, timings)
               .dump(2)
        << '\n';
    return pass ? 0 : 1;
  }
  if (r1) {
    std::size_t ok = 0;
    for (const auto& r : r1->rows) {
      ok += r.pass;
      out << (r.pass ? "PASS " : "FAIL ") << r.type_name << "  order " << r.order << "  dim " << r.dim
          << "  f " << join(r.f_vector) << '\n';
    }
    out << "effective equivalence matrix " << (r1->matrix_is_identity ? "is the identity" : "MISMATCH")
        << '\n';
    out << "table1 " << ok << "/" << r1->rows.size() << (r1->pass ? " PASS" : " FAIL") << '\n';
    if (timings) out << "table1 seconds " << r1->seconds << '\n';
  }
  if (r2) {
    for (const auto& r : *r2)
      out << (r.pass ? "PASS " : "FAIL ") << "table2 " << r.name << "  f " << join(r.f_vector)
          << "  euler " << yes_no(r.euler) << "  complements " << yes_no(r.complement_property) << '\n';
  }
  if (r3) {
    for (const auto& r : *r3) {
      out << (r.pass ? "PASS " : "FAIL ") << "face " << r.name << "  |G| " << r.order << "  dim "
          << r.dim << "  f " << join(r.f_vector);
      if (timings) out << "  " << r.seconds << "s";
      out << '\n';
    }
  }
  return pass ? 0 : 1;
}

struct ConstructArgs {
  std::string kind;
  std::size_t dim = 0;
  std::size_t l = 0;
  std::size_t row = 0;
  std::string label;
  GroupArgs group;
};

int cmd_construct(const ConstructArgs& a, bool json, std::ostream& out) {
  PermutationGroup g;
  std::optional<std::vector<std::size_t>> face;
  std::optional<std::vector<Permutation>> subset;
  if (a.kind == "cube") {
    g = canonical_group("cube(" + std::to_string(a.dim) + ")");
  } else if (a.kind == "crosspolytope") {
    g = canonical_group("crosspolytope(" + std::to_string(a.dim) + ")");
  } else if (a.kind == "regular") {
    if (a.label.empty() && a.group.degree == 0)
      throw Error(ErrorCode::SyntaxError, "regular needs --label or -n/-g");
    g = a.label.empty() ? regular_representation(make_group(a.group))
                        : canonical_group("regular(" + a.label + ")");
  } else if (a.kind == "table1") {
    g = canonical_group("table1(" + std::to_string(a.row) + ")");
  } else if (a.kind == "constr") {
    auto c = constr_face(a.l, a.dim);
    g = std::move(c.group);
    face = std::move(c.face);
  } else if (a.kind == "pyramid") {
    auto p = pyramid_group(make_group(a.group));
    g = std::move(p.group);
    subset = std::move(p.face_subset);
  } else if (a.kind == "free_sum_double") {
    g = free_sum_double(make_group(a.group));
  } else {
    throw Error(ErrorCode::UnknownName, "unknown kind: " + a.kind);
  }
  if (json) {
    auto j = group_json(g);
    if (face) {
      Json f = Json::array();
      for (auto i : *face) f.push_back(format_element(g.element(i)));
      j["face"] = std::move(f);
    }
    if (subset) {
      Json f = Json::array();
      for (const auto& x : *subset) f.push_back(format_element(x));
      j["face_subset"] = std::move(f);
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  out << group_line(g) << '\n';
  if (face) {
    out << "face";
    for (std::size_t i = 0; i < face->size(); ++i)
      out << (i ? "; " : " ") << format_element(g.element((*face)[i]));
    out << '\n';
  }
  if (subset) {
    out << "face_subset";
    for (std::size_t i = 0; i < subset->size(); ++i) out << (i ? "; " : " ") << format_element((*subset)[i]);
    out << '\n';
  }
  return 0;
}

int cmd_check(const std::vector<GroupSpec>& specs, bool json, std::ostream& out) {
  bool pass = true;
  Json all = Json::array();
  for (const auto& spec : specs) {
    const auto g = generate(spec);
    const auto r = check_invariants(g);
    pass = pass && r.pass;
    if (json) {
      Json j = group_json(g);
      Json checks = Json::array();
      for (const auto& c : r.checks) {
        Json x;
        x["name"] = c.name;
        x["pass"] = c.pass;
        if (!c.detail.empty()) x["detail"] = c.detail;
        checks.push_back(std::move(x));
      }
      j["checks"] = std::move(checks);
      j["pass"] = r.pass;
      all.push_back(std::move(j));
    } else {
      out << group_line(g) << "  (order " << g.order() << ")\n";
      for (const auto& c : r.checks) {
        out << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << "  " << c.detail;
        out << '\n';
      }
    }
  }
  if (json) out << all.dump(2) << '\n';
  return pass ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"permutation polytopes"};
  app.name("perm");
  app.require_subcommand(1);

  bool json = false;
  std::string out_path;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "emit JSON");
    sub->add_option("--out", out_path, "write the report to a file");
  };

  GroupArgs g1, g2;
  std::string subset, file;
  std::vector<std::string> cases;
  bool t1 = false, t2 = false, faces = false, timings = false;
  ConstructArgs ca;

  auto* polytope = app.add_subcommand("polytope", "invariants and face lattice of P(G)");
  add_group_options(polytope, g1);
  common(polytope);

  auto* face = app.add_subcommand("face", "smallest face containing a set of elements");
  add_group_options(face, g1);
  face->add_option("--subset", subset, "semicolon-separated elements, e allowed")->required();
  common(face);

  auto* equiv = app.add_subcommand("equiv", "compare two groups");
  add_group_options(equiv, g1);
  add_group_options(equiv, g2, "2");
  common(equiv);

  auto* classify = app.add_subcommand("classify", "re-verify the classification tables");
  classify->add_flag("--table1", t1);
  classify->add_flag("--table2", t2);
  classify->add_flag("--faces", faces, "all face constructions");
  classify->add_option("--case", cases, "one face construction by name");
  classify->add_flag("--timings", timings);
  common(classify);

  auto* construct = app.add_subcommand("construct", "print a constructed group");
  construct->add_option("--kind", ca.kind, "cube|crosspolytope|regular|table1|constr|pyramid|free_sum_double")
      ->required();
  construct->add_option("--dim", ca.dim);
  construct->add_option("--l", ca.l, "crosspolytope part for constr");
  construct->add_option("--row", ca.row, "1-based Table 1 row");
  construct->add_option("--label", ca.label, "group label for regular, e.g. Z/2 x Z/4");
  construct->add_option("-n,--degree", ca.group.degree);
  construct->add_option("-g,--generators", ca.group.generators);
  common(construct);

  auto* check = app.add_subcommand("check", "run the invariant suite");
  check->add_option("-n,--degree", g1.degree);
  check->add_option("-g,--generators", g1.generators);
  check->add_option("--file", file, "one group per line: n=<d>; gens");
  common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    if (polytope->parsed()) {
      code = cmd_polytope(g1, json, buffer);
    } else if (face->parsed()) {
      code = cmd_face(g1, subset, json, buffer);
    } else if (equiv->parsed()) {
      code = cmd_equiv(g1, g2, json, buffer);
    } else if (classify->parsed()) {
      for (const auto& c : cases) build_face_case(c);  // reject unknown names before running
      code = cmd_classify(t1, t2, faces, cases, json, timings, buffer);
    } else if (construct->parsed()) {
      code = cmd_construct(ca, json, buffer);
    } else if (check->parsed()) {
      std::vector<GroupSpec> specs;
      if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
          err << "perm: cannot read " << file << '\n';
          return 2;
        }
        specs = parse_group_file(in);
      } else {
        if (g1.degree == 0 || g1.generators.empty()) {
          err << "perm check: give -n and -g, or --file\n";
          return 2;
        }
        specs.push_back({g1.degree, parse_generator_list(g1.generators, g1.degree)});
      }
      code = cmd_check(specs, json, buffer);
    }
  } catch (const Error& e) {
    err << "perm: " << e.what() << '\n';
    return is_input_error(e.code()) ? 2 : 1;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "perm: cannot write " << out_path << '\n';
      return 1;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace permpoly::cli
