#include "permpoly/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "permpoly/error.hpp"

namespace permpoly {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::RepeatedPoint: return "RepeatedPoint";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::IdentityInput: return "IdentityInput";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidFace: return "InvalidFace";
    case ErrorCode::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case ErrorCode::NotAPowerOfTwo: return "NotAPowerOfTwo";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x >= images.size() || seen[x]) {
      throw Error(ErrorCode::InvalidArgument, "image sequence is not a bijection");
    }
    seen[x] = true;
  }
  return Permutation(std::move(images), 0);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), 0);
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& c : cycle_decomposition(*this).cycles) {
    result = std::lcm(result, c.entries.size());
  }
  return result;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) s.push_back(static_cast<Point>(i));
  }
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
  }
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[b.images_[i]];
  return Permutation(std::move(out), 0);
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition d;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    Cycle c;
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      c.entries.push_back(x);
    }
    d.cycles.push_back(std::move(c));
  }
  d.support = p.support();
  return d;
}

Permutation from_cycles(const std::vector<Cycle>& cycles, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.entries.size(); ++k) {
      Point x = c.entries[k];
      if (x >= degree) throw Error(ErrorCode::OutOfRange, "cycle point exceeds degree");
      if (used[x]) throw Error(ErrorCode::RepeatedPoint, "cycles are not disjoint");
      used[x] = true;
      images[x] = c.entries[(k + 1) % c.entries.size()];
    }
  }
  return Permutation::from_images(std::move(images));
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Cycle> cycles;
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw Error(ErrorCode::SyntaxError,
                msg + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    Cycle c;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 1'000'000) throw Error(ErrorCode::OutOfRange, "point too large");
        ++pos;
      }
      if (value < 1 || value > degree) {
        throw Error(ErrorCode::OutOfRange,
                    "point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      }
      Point x = static_cast<Point>(value - 1);
      if (used[x]) {
        throw Error(ErrorCode::RepeatedPoint, "point " + std::to_string(value) + " appears twice");
      }
      used[x] = true;
      c.entries.push_back(x);
      std::size_t before = pos;
      skip_space();
      if (pos == before && pos < text.size() && text[pos] != ')') fail("expected space or ')'");
    }
    if (pos >= text.size()) fail("unterminated cycle");
    if (c.entries.empty()) fail("empty cycle");
    ++pos;  // ')'
    if (c.entries.size() >= 2) cycles.push_back(std::move(c));
    skip_space();
  }
  return from_cycles(cycles, degree);
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream out;
  for (const auto& c : cycle_decomposition(p).cycles) {
    out << '(';
    for (std::size_t k = 0; k < c.entries.size(); ++k) {
      if (k) out << ' ';
      out << c.entries[k] + 1;
    }
    out << ')';
  }
  return out.str();
}

std::string format_element(const Permutation& p) {
  return p.is_identity() ? std::string("e") : format_cycles(p);
}

}  // namespace permpoly
