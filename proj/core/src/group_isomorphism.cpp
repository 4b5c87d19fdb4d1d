#include "permpoly/group_isomorphism.hpp"

#include "permpoly/error.hpp"

namespace permpoly {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

struct CayleyData {
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> orders;
};

CayleyData cayley(const PermutationGroup& g) {
  const std::size_t m = g.order();
  CayleyData d{std::vector<std::vector<std::size_t>>(m, std::vector<std::size_t>(m)),
               std::vector<std::size_t>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) d.table[i][j] = g.multiply(i, j);
    d.orders[i] = g.element(i).order();
  }
  return d;
}

class Search {
 public:
  Search(const PermutationGroup& g1, const PermutationGroup& g2,
         const std::function<bool(const GroupIsomorphism&)>& visit)
      : c1_(cayley(g1)), c2_(cayley(g2)), visit_(visit) {
    for (const auto& s : reduce_generators(g1.generators(), g1.degree())) {
      gens_.push_back(g1.index_or_throw(s));
    }
  }

  std::size_t run() {
    std::vector<std::size_t> image(c1_.orders.size(), kUnset);
    std::vector<bool> used(c2_.orders.size(), false);
    image[0] = 0;
    used[0] = true;
    std::vector<std::size_t> mapped{0};
    recurse(0, image, used, mapped);
    return count_;
  }

 private:
  // Extends the partial map to the subgroup generated by gens_[0..depth],
  // returning false on any inconsistency or collision.
  bool extend(std::size_t depth, std::vector<std::size_t>& image, std::vector<bool>& used,
              std::vector<std::size_t>& mapped) const {
    for (std::size_t head = 0; head < mapped.size(); ++head) {
      const std::size_t x = mapped[head];
      for (std::size_t k = 0; k <= depth; ++k) {
        const std::size_t s = gens_[k];
        const std::size_t y = c1_.table[x][s];
        const std::size_t target = c2_.table[image[x]][image[s]];
        if (image[y] == kUnset) {
          if (used[target]) return false;
          image[y] = target;
          used[target] = true;
          mapped.push_back(y);
        } else if (image[y] != target) {
          return false;
        }
      }
    }
    return true;
  }

  bool recurse(std::size_t depth, const std::vector<std::size_t>& image,
               const std::vector<bool>& used, const std::vector<std::size_t>& mapped) {
    if (depth == gens_.size()) {
      ++count_;
      return visit_(GroupIsomorphism{image});
    }
    const std::size_t s = gens_[depth];
    for (std::size_t t = 0; t < c2_.orders.size(); ++t) {
      if (c2_.orders[t] != c1_.orders[s]) continue;
      auto next_image = image;
      auto next_used = used;
      auto next_mapped = mapped;
      if (next_image[s] != kUnset) {
        if (next_image[s] != t) continue;
      } else {
        if (next_used[t]) continue;
        next_image[s] = t;
        next_used[t] = true;
        next_mapped.push_back(s);
      }
      if (!extend(depth, next_image, next_used, next_mapped)) continue;
      if (!recurse(depth + 1, next_image, next_used, next_mapped)) return false;
    }
    return true;
  }

  CayleyData c1_, c2_;
  std::vector<std::size_t> gens_;
  const std::function<bool(const GroupIsomorphism&)>& visit_;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t for_each_isomorphism(const PermutationGroup& g1, const PermutationGroup& g2,
                                 const std::function<bool(const GroupIsomorphism&)>& visit,
                                 std::size_t cap) {
  if (g1.order() > cap || g2.order() > cap) {
    throw Error(ErrorCode::CapExceeded,
                "isomorphism search limited to groups of order " + std::to_string(cap));
  }
  if (g1.order() != g2.order()) return 0;
  Search search(g1, g2, visit);
  return search.run();
}

std::vector<GroupIsomorphism> isomorphisms(const PermutationGroup& g1,
                                           const PermutationGroup& g2, std::size_t cap) {
  std::vector<GroupIsomorphism> out;
  for_each_isomorphism(
      g1, g2,
      [&](const GroupIsomorphism& phi) {
        out.push_back(phi);
        return true;
      },
      cap);
  return out;
}

bool are_isomorphic(const PermutationGroup& g1, const PermutationGroup& g2, std::size_t cap) {
  return for_each_isomorphism(g1, g2, [](const GroupIsomorphism&) { return false; }, cap) > 0;
}

}  // namespace permpoly
