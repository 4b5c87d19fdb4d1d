#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "permpoly/group.hpp"
#include "permpoly/group_isomorphism.hpp"
#include "permpoly/matrix.hpp"

namespace permpoly {

/// A permutation representation of an abstract group A, stored as the image
/// of every element of A in A's canonical element order.
class Representation {
 public:
  /// The inclusion of G into S_n.
  static Representation natural(const PermutationGroup& group);

  /// The regular representation x -> x g^-1, indexed by G's own elements.
  static Representation regular(const PermutationGroup& group);

  /// rho o phi: element i of the source of phi maps to target.element(phi.image[i]).
  static Representation pullback(const PermutationGroup& target, const GroupIsomorphism& phi);

  /// Extends generator images (for a.generators(), in order) to a
  /// homomorphism. Throws InvalidArgument if they do not define one and
  /// DegreeMismatch if the images have different degrees.
  static Representation from_generator_images(const PermutationGroup& a,
                                              const std::vector<Permutation>& images,
                                              std::size_t degree);

  /// rho1 + rho2 acting on disjoint point sets (degree n1 + n2).
  static Representation direct_sum(const Representation& r1, const Representation& r2);

  std::size_t group_order() const noexcept { return images_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& images() const noexcept { return images_; }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> images_;
};

/// Affine dependencies sum_a l_a rho(a) = 0, sum_a l_a = 0, as the canonical
/// (reduced row echelon) basis of a subspace of Q^|A|.
struct AffineKernel {
  std::size_t order = 0;
  std::vector<RatVector> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  friend bool operator==(const AffineKernel&, const AffineKernel&) = default;
};

AffineKernel affine_kernel(const Representation& rho);
AffineKernel affine_kernel(const PermutationGroup& group);

/// Equality of affine kernels. Throws DimensionMismatch for different
/// group orders.
bool stably_equivalent(const Representation& r1, const Representation& r2);

/// First isomorphism phi: G1 -> G2 (in enumeration order) with
/// ker(natural G1) == ker(natural G2 o phi). Throws CapExceeded.
std::optional<GroupIsomorphism> effectively_equivalent(const PermutationGroup& g1,
                                                       const PermutationGroup& g2,
                                                       std::size_t cap = kDefaultIsomorphismCap);

/// dim P(G) == |G| - 1.
bool is_simplex(const PermutationGroup& group);

}  // namespace permpoly
