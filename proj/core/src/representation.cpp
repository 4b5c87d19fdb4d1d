#include "permpoly/representation.hpp"

#include "permpoly/error.hpp"
#include "permpoly/linalg.hpp"
#include "permpoly/perm_polytope.hpp"

namespace permpoly {

Representation Representation::natural(const PermutationGroup& group) {
  Representation r;
  r.degree_ = group.degree();
  r.images_ = group.elements();
  return r;
}

Representation Representation::regular(const PermutationGroup& group) {
  Representation r;
  r.degree_ = group.order();
  for (std::size_t i = 0; i < group.order(); ++i) r.images_.push_back(regular_image(group, i));
  return r;
}

Representation Representation::pullback(const PermutationGroup& target, const GroupIsomorphism& phi) {
  Representation r;
  r.degree_ = target.degree();
  for (auto j : phi.image) r.images_.push_back(target.element(j));
  return r;
}

Representation Representation::from_generator_images(const PermutationGroup& a,
                                                     const std::vector<Permutation>& images,
                                                     std::size_t degree) {
  const auto& gens = a.generators();
  if (images.size() != gens.size()) throw Error(ErrorCode::InvalidArgument, "one image per generator");
  for (const auto& p : images) {
    if (p.degree() != degree) throw Error(ErrorCode::DegreeMismatch, "image of wrong degree");
  }
  const std::size_t m = a.order();
  std::vector<std::optional<Permutation>> img(m);
  img[0] = Permutation(degree);
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto y = a.index_or_throw(gens[k] * a.element(x));
      Permutation value = images[k] * *img[x];
      if (!img[y]) {
        img[y] = std::move(value);
        queue.push_back(y);
      } else if (*img[y] != value) {
        throw Error(ErrorCode::InvalidArgument, "generator images do not define a homomorphism");
      }
    }
  }
  Representation r;
  r.degree_ = degree;
  for (auto& p : img) r.images_.push_back(std::move(*p));
  return r;
}

Representation Representation::direct_sum(const Representation& r1, const Representation& r2) {
  if (r1.group_order() != r2.group_order()) throw Error(ErrorCode::DimensionMismatch, "different groups");
  Representation r;
  r.degree_ = r1.degree_ + r2.degree_;
  for (std::size_t i = 0; i < r1.group_order(); ++i) {
    std::vector<Point> images(r.degree_);
    for (std::size_t j = 0; j < r1.degree_; ++j) images[j] = r1.images_[i](static_cast<Point>(j));
    for (std::size_t j = 0; j < r2.degree_; ++j) {
      images[r1.degree_ + j] = static_cast<Point>(r1.degree_ + r2.images_[i](static_cast<Point>(j)));
    }
    r.images_.push_back(Permutation::from_images(std::move(images)));
  }
  return r;
}

AffineKernel affine_kernel(const Representation& rho) {
  const std::size_t n = rho.degree(), m = rho.group_order();
  RatMatrix mat(n * n + 1, m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto& p = rho.images()[a];
    for (std::size_t j = 0; j < n; ++j) mat(p(static_cast<Point>(j)) * n + j, a) = 1;
    mat(n * n, a) = 1;
  }
  return AffineKernel{m, rank_nullspace(mat).nullspace};
}

AffineKernel affine_kernel(const PermutationGroup& group) {
  return affine_kernel(Representation::natural(group));
}

bool stably_equivalent(const Representation& r1, const Representation& r2) {
  if (r1.group_order() != r2.group_order()) throw Error(ErrorCode::DimensionMismatch, "different groups");
  return affine_kernel(r1) == affine_kernel(r2);
}

std::optional<GroupIsomorphism> effectively_equivalent(const PermutationGroup& g1,
                                                       const PermutationGroup& g2, std::size_t cap) {
  if (g1.order() != g2.order()) return std::nullopt;
  const auto k1 = affine_kernel(g1);
  std::optional<GroupIsomorphism> found;
  for_each_isomorphism(
      g1, g2,
      [&](const GroupIsomorphism& phi) {
        if (affine_kernel(Representation::pullback(g2, phi)) != k1) return true;
        found = phi;
        return false;
      },
      cap);
  return found;
}

bool is_simplex(const PermutationGroup& group) { return dimension(group) + 1 == group.order(); }

}  // namespace permpoly
