#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/group.hpp"

namespace permpoly {

struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Semicolon-separated cycle expressions, e.g. "(1 2); (3 4 5)". Empty
/// items are skipped. Throws like parse_cycles.
std::vector<Permutation> parse_generator_list(std::string_view text, std::size_t degree);

/// Like parse_generator_list, but "e" denotes the identity and empty items
/// are errors.
std::vector<Permutation> parse_element_list(std::string_view text, std::size_t degree);

/// "n=<degree>; <gen>; <gen>; ...". Throws SyntaxError.
GroupSpec parse_group_line(std::string_view line);

/// One group per line; blank lines and lines starting with '#' are skipped.
std::vector<GroupSpec> parse_group_file(std::istream& in);

PermutationGroup generate(const GroupSpec& spec, std::size_t cap = kDefaultElementCap);

}  // namespace permpoly
