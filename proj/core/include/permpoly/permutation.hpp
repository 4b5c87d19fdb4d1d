#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpoly {

/// Points are 0-based internally; the cycle-notation text format is 1-based.
using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored by its image sequence.
///
/// Composition follows function notation: (a * b)(i) = a(b(i)).
/// Ordering is lexicographic on the image sequence, so the identity is the
/// smallest permutation of a given degree.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws Error(InvalidArgument) if `images` is not a bijection.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t order() const;

  /// Non-fixed points, ascending.
  std::vector<Point> support() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images, int /*unchecked*/) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// A cycle of length >= 2; entries are distinct 0-based points, starting at
/// the smallest one.
struct Cycle {
  std::vector<Point> entries;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct CycleDecomposition {
  std::vector<Cycle> cycles;   // sorted by smallest entry
  std::vector<Point> support;  // ascending
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Product of the given pairwise disjoint cycles as a permutation of degree n.
Permutation from_cycles(const std::vector<Cycle>& cycles, std::size_t degree);

/// Parses a product of disjoint cycles such as "(1 2 3)(4 5)" over {1..n}.
/// One-point cycles like "(5)" are accepted and denote a fixed point.
///
/// Non-disjoint products are rejected with RepeatedPoint rather than composed.
/// Throws OutOfRange, RepeatedPoint or SyntaxError.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical cycle notation: single spaces, cycles ordered by smallest entry.
/// The identity is the empty product and prints as "".
std::string format_cycles(const Permutation& p);

/// Same as format_cycles but prints the identity as "e".
std::string format_element(const Permutation& p);

}  // namespace permpoly

template <>
struct std::hash<permpoly::Permutation> {
  std::size_t operator()(const permpoly::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};
