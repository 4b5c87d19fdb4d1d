#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/group.hpp"

namespace permpoly {

/// One row of the table of permutation polytopes of dimension <= 4.
struct Table1Row {
  std::string type_name;          // as printed, e.g. "triangular prism"
  std::string reference;          // reference_lattice expression
  std::string isomorphism_type;   // e.g. "Z/2 x Z/4", "(Z/2)^3", "S3"
  std::size_t degree;
  std::vector<std::string> generators;  // cycle notation
  bool composite;                 // a product of lower-dimensional rows
};

const std::vector<Table1Row>& table1_rows();
PermutationGroup table1_group(const Table1Row& row);

/// Abstract group for an isomorphism-type label: "Z/k", "(Z/k)^m", "S3",
/// and products joined by " x ". Throws UnknownName.
PermutationGroup group_from_label(const std::string& label);

/// "cube(d)", "crosspolytope(d)", "regular(<label>)" (label as for
/// group_from_label) or "table1(<row>)" with a 1-based row number.
/// Throws UnknownName, SyntaxError, NotAPowerOfTwo.
PermutationGroup canonical_group(std::string_view kind);

struct Table1RowResult {
  std::string type_name;
  std::size_t order = 0;
  std::size_t dim = 0;
  std::vector<std::size_t> f_vector;
  std::vector<std::size_t> reference_f_vector;
  bool lattice_matches = false;
  bool isomorphism_type_matches = false;
  bool pass = false;
  double seconds = 0;
};

struct Table1Report {
  std::vector<Table1RowResult> rows;
  /// effective[i][j]: rows i and j have effectively equivalent groups.
  std::vector<std::vector<bool>> effective;
  /// Row pairs with the same polytope type but non-isomorphic groups, with
  /// the outcome of the affine equivalence test.
  struct Pair {
    std::size_t a, b;
    bool affinely_equivalent;
    bool groups_isomorphic;
  };
  std::vector<Pair> same_type_pairs;
  bool matrix_is_identity = false;
  bool pass = false;
  double seconds = 0;
};

Table1Report verify_table1();

struct Table2Result {
  std::string name;
  std::vector<std::size_t> f_vector;
  std::vector<std::size_t> expected_f_vector;
  bool euler = false;
  /// Every facet's complement is a face of the lattice.
  bool complement_property = false;
  bool pass = false;  // f-vector matches and Euler holds
};

std::vector<Table2Result> verify_table2();

}  // namespace permpoly
