#include "permpoly/group_file.hpp"

#include <algorithm>
#include <cctype>

#include "permpoly/error.hpp"

namespace permpoly {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<Permutation> parse_generator_list(std::string_view text, std::size_t degree) {
  std::vector<Permutation> out;
  for (auto item : split(text, ';')) {
    if (!item.empty()) out.push_back(parse_cycles(item, degree));
  }
  return out;
}

std::vector<Permutation> parse_element_list(std::string_view text, std::size_t degree) {
  std::vector<Permutation> out;
  for (auto item : split(text, ';')) {
    if (item.empty()) throw Error(ErrorCode::SyntaxError, "empty element in list");
    out.push_back(item == "e" ? Permutation(degree) : parse_cycles(item, degree));
  }
  return out;
}

GroupSpec parse_group_line(std::string_view line) {
  line = trim(line);
  const auto semi = line.find(';');
  const auto head = trim(line.substr(0, semi));
  if (head.size() < 3 || head.substr(0, 2) != "n=") {
    throw Error(ErrorCode::SyntaxError, "group line must start with n=<degree>");
  }
  const auto digits = trim(head.substr(2));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorCode::SyntaxError, "bad degree '" + std::string(digits) + "'");
  }
  GroupSpec spec;
  spec.degree = std::stoul(std::string(digits));
  if (spec.degree == 0) throw Error(ErrorCode::SyntaxError, "degree must be positive");
  if (semi != std::string_view::npos) spec.generators = parse_generator_list(line.substr(semi + 1), spec.degree);
  return spec;
}

std::vector<GroupSpec> parse_group_file(std::istream& in) {
  std::vector<GroupSpec> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(parse_group_line(t));
  }
  return out;
}

PermutationGroup generate(const GroupSpec& spec, std::size_t cap) {
  return PermutationGroup::generate(spec.generators, spec.degree, cap);
}

}  // namespace permpoly
