#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "permpoly/permutation.hpp"

namespace permpoly {

inline constexpr std::size_t kDefaultElementCap = 10'000;
inline constexpr std::size_t kDefaultSubgroupCap = 100;

/// A subgroup of S_n given by generators, with its full element list in
/// canonical order (lexicographic on images, so the identity comes first).
class PermutationGroup {
 public:
  PermutationGroup() = default;

  /// Closure of `generators` in S_degree. Throws CapExceeded when the group
  /// has more than `cap` elements and DegreeMismatch on a bad generator.
  static PermutationGroup generate(std::vector<Permutation> generators, std::size_t degree,
                                   std::size_t cap = kDefaultElementCap);

  /// The trivial subgroup of S_degree.
  static PermutationGroup trivial(std::size_t degree);

  /// Subgroup whose elements are exactly `elements`. Throws NotASubgroup if
  /// the set is not closed. A small generating set is chosen greedily.
  static PermutationGroup from_elements(std::vector<Permutation> elements, std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const Permutation& identity() const { return elements_.front(); }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  /// Throws NotAMember.
  std::size_t index_or_throw(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// Index of elements_[i] * elements_[j].
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;

  /// Orbits on {0..n-1}, each ascending, ordered by smallest point.
  std::vector<std::vector<Point>> orbits() const;

  /// Points moved by some element.
  std::vector<Point> support() const;

  bool is_abelian() const;
  bool is_subgroup_of(const PermutationGroup& g) const;

  /// Same degree and element set (generators may differ).
  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::vector<Permutation> sorted_elements);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t> index_;
};

/// A generating subset of `generators`, dropping the ones already generated
/// by earlier entries.
std::vector<Permutation> reduce_generators(const std::vector<Permutation>& generators,
                                           std::size_t degree);

/// Disjoint blocks covering {0..n-1}.
class PartitionOfN {
 public:
  /// Throws InvalidArgument unless `blocks` partition {0..degree-1}.
  PartitionOfN(std::vector<std::vector<Point>> blocks, std::size_t degree);

  const std::vector<std::vector<Point>>& blocks() const noexcept { return blocks_; }
  std::size_t degree() const noexcept { return degree_; }
  /// Index of the block containing x.
  std::size_t block_of(Point x) const { return block_of_[x]; }

  /// Every set partition of {0..degree-1}, in restricted-growth order.
  static std::vector<PartitionOfN> all(std::size_t degree);

 private:
  std::vector<std::vector<Point>> blocks_;
  std::vector<std::size_t> block_of_;
  std::size_t degree_ = 0;
};

struct Subelement {
  enum class Kind { Identity, Whole, Proper };
  Permutation element;
  Kind kind;
};

/// All h in G that are products of a subset of the disjoint cycles of g,
/// in canonical order. Throws NotAMember if g is not in G.
std::vector<Subelement> subelements(const Permutation& g, const PermutationGroup& group);

/// True iff e and g are the only subelements of g in G.
/// Throws NotAMember, IdentityInput.
bool is_indecomposable(const Permutation& g, const PermutationGroup& group);

/// G acting on its canonically ordered element list by x -> x * g^{-1}
/// (a homomorphism for the composition convention used here).
PermutationGroup regular_representation(const PermutationGroup& group);

/// Image of element i of G under the regular representation.
Permutation regular_image(const PermutationGroup& group, std::size_t i);

enum class EmbedMode { Disjoint, Diagonal };

/// Disjoint: {(g, h)} acting on m + n points. Diagonal: {(s, s)} acting on
/// 2n points; requires G == H (DegreeMismatch otherwise).
PermutationGroup embed_product(const PermutationGroup& g, const PermutationGroup& h, EmbedMode mode);

/// Image of a permutation of degree m placed on points offset..offset+m-1 of
/// a permutation of degree `degree`.
Permutation shift(const Permutation& p, std::size_t offset, std::size_t degree);

struct PyramidGroup {
  PermutationGroup group;               // E = diag(G) <p>, degree 2n
  Permutation apex;                     // p = (1 n+1)(2 n+2)...(n 2n)
  std::vector<Permutation> face_subset; // diag(G) together with p, canonical order
};

PyramidGroup pyramid_group(const PermutationGroup& group);

/// Setwise stabilizer of every block.
PermutationGroup stabilizer(const PermutationGroup& group, const PartitionOfN& partition);

/// Orbit partition of H on {0..n-1} (fixed points are singleton blocks).
PartitionOfN orbit_partition(const PermutationGroup& group);

/// All subgroups, ordered by (order, element list). Throws CapExceeded when
/// |G| exceeds `cap`.
std::vector<PermutationGroup> subgroups(const PermutationGroup& group,
                                        std::size_t cap = kDefaultSubgroupCap);

}  // namespace permpoly
