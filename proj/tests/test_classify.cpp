#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "permpoly/error.hpp"
#include "permpoly/classify.hpp"
#include "permpoly/face_cases.hpp"
#include "permpoly/json.hpp"
#include "permpoly/lattice_isomorphism.hpp"
#include "permpoly/perm_polytope.hpp"
#include "permpoly/polytope.hpp"
#include "permpoly/reference.hpp"
#include "permpoly/representation.hpp"

using namespace permpoly;

TEST(Table1, RowsMatchPublishedData) {
  const auto& rows = table1_rows();
  ASSERT_EQ(rows.size(), 14u);
  EXPECT_EQ(rows[4].type_name, "triangular prism");
  EXPECT_EQ(rows[4].generators, (std::vector<std::string>{"(1 2)", "(3 4 5)"}));
  const auto prism = table1_group(rows[4]);
  EXPECT_EQ(prism.order(), 6u);
  EXPECT_TRUE(combinatorially_isomorphic(face_lattice(build(prism).vpoly), reference_lattice("prism(triangle)")));
  const auto cross = table1_group(rows[10]);
  EXPECT_EQ(rows[10].type_name, "4-crosspolytope");
  EXPECT_EQ(cross.order(), 8u);
  for (const auto& row : rows) {
    const auto g = table1_group(row);
    std::string gens;
    for (const auto& s : row.generators) gens += s + ";";
    EXPECT_EQ(g.order(), oracle::closure(oracle::parse_list(gens, static_cast<int>(row.degree)), static_cast<int>(row.degree)).size())
        << row.type_name;
  }
}

TEST(Table1, VerifyAll) {
  const auto r = verify_table1();
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.rows.size(), 14u);
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.pass) << row.type_name;
    EXPECT_LE(row.dim, 4u);
    EXPECT_EQ(row.f_vector, row.reference_f_vector);
  }
  for (std::size_t i = 0; i < 14; ++i)
    for (std::size_t j = 0; j < 14; ++j) EXPECT_EQ(r.effective[i][j], i == j) << i << "," << j;
  // The two tetrahedron rows: affinely but not effectively equivalent.
  bool saw_tetrahedra = false;
  for (const auto& p : r.same_type_pairs) {
    EXPECT_TRUE(p.affinely_equivalent);
    EXPECT_FALSE(p.groups_isomorphic);
    if (r.rows[p.a].type_name == "tetrahedron") saw_tetrahedra = true;
  }
  EXPECT_TRUE(saw_tetrahedra);
}

TEST(Table1, GroupLabels) {
  EXPECT_EQ(group_from_label("Z/2 x Z/4").order(), 8u);
  EXPECT_EQ(group_from_label("(Z/2)^3").order(), 8u);
  EXPECT_EQ(group_from_label("S3").order(), 6u);
  EXPECT_FALSE(group_from_label("S3").is_abelian());
  EXPECT_THROW(group_from_label("A5"), Error);
}

TEST(Table2, StaticLattices) {
  const auto rs = verify_table2();
  ASSERT_EQ(rs.size(), 3u);
  const std::vector<std::vector<std::size_t>> want = {{8, 21, 22, 9}, {7, 19, 23, 11}, {8, 25, 32, 15}};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(rs[i].pass) << rs[i].name;
    EXPECT_EQ(rs[i].f_vector, want[i]);
    EXPECT_EQ(rs[i].expected_f_vector, want[i]);
    const auto& f = rs[i].f_vector;
    EXPECT_EQ(static_cast<long>(f[0]) - static_cast<long>(f[1]) + static_cast<long>(f[2]) - static_cast<long>(f[3]), 0);
  }
  EXPECT_TRUE(rs[0].complement_property);
  EXPECT_FALSE(rs[1].complement_property);
  EXPECT_FALSE(rs[2].complement_property);
}

TEST(FaceCases, AllVerify) {
  for (const auto& name : face_case_names()) {
    const auto c = build_face_case(name);
    const auto r = verify_face_case(c);
    EXPECT_TRUE(r.pass) << name;
    EXPECT_TRUE(r.is_face) << name;
    EXPECT_TRUE(r.isomorphic) << name;
    EXPECT_EQ(r.order, c.expected_order) << name;
    EXPECT_EQ(r.dim, c.expected_dim) << name;
    EXPECT_EQ(r.f_vector, r.target_f_vector) << name;
    // Group order by independent closure.
    std::string gens;
    for (const auto& g : c.group.generators()) gens += format_cycles(g) + ";";
    const int n = static_cast<int>(c.group.degree());
    EXPECT_EQ(oracle::closure(oracle::parse_list(gens, n), n).size(), c.expected_order) << name;
  }
  EXPECT_THROW(build_face_case("nope"), Error);
}

TEST(FaceCases, KnownFacts) {
  auto p = verify_face_case(build_face_case("P"));
  EXPECT_EQ(p.order, 54u);
  EXPECT_EQ(p.f_vector, (std::vector<std::size_t>{8, 21, 22, 9}));
  auto w = build_face_case("dual_W");
  EXPECT_EQ(w.group.order(), 36u);
  EXPECT_EQ(w.group.degree(), 24u);
  auto h = verify_face_case(build_face_case("hypersimplex"));
  EXPECT_EQ(h.order, 81u);
  EXPECT_EQ(h.dim, 5u);
  EXPECT_EQ(build_face_case("hypersimplex").group.degree(), 15u);
  EXPECT_EQ(build_face_case("octahedron").group.degree(), 12u);
}

// The alternative reading with v3 in S gives a different polytope.
TEST(FaceCases, WedgeReadingWithV3) {
  // v3 already lies in F({e, v1, v2, v4}), so both readings give one face.
  const auto with_v3 = wedge_octahedron_facet_with_v3();
  EXPECT_EQ(with_v3.face, build_face_case("wedge_octahedron_facet").face);
  const auto r = verify_face_case(with_v3);
  EXPECT_TRUE(r.is_face);
  EXPECT_TRUE(r.isomorphic);
}

TEST(Json, ReportsAreDeterministic) {
  const auto a = classification_report(nullptr, nullptr, nullptr).dump();
  EXPECT_EQ(a, classification_report(nullptr, nullptr, nullptr).dump());
  const auto t1 = verify_table1();
  const auto t1b = verify_table1();
  EXPECT_EQ(to_json(t1).dump(), to_json(t1b).dump());
  EXPECT_FALSE(to_json(t1, true).dump() == to_json(t1).dump());
  const auto g = testing_support::make_group(5, "(1 2 3 4 5)");
  const auto j = group_report(g);
  EXPECT_EQ(j["dim"], 4);
  EXPECT_EQ(j["f_vector"], Json::parse("[5,10,10,5]"));
  EXPECT_EQ(j.dump(), group_report(g).dump());
}
