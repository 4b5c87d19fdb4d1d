#include "permpoly/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "permpoly/error.hpp"

namespace permpoly {

namespace {

std::vector<Permutation> closure(const std::vector<Permutation>& generators, std::size_t degree,
                                 std::size_t cap) {
  std::unordered_map<Permutation, std::size_t> seen;
  std::vector<Permutation> elements{Permutation(degree)};
  seen.emplace(elements.front(), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      Permutation y = elements[head] * s;
      if (seen.contains(y)) continue;
      if (elements.size() >= cap) {
        throw Error(ErrorCode::CapExceeded,
                    "group closure exceeds the element cap of " + std::to_string(cap));
      }
      seen.emplace(y, elements.size());
      elements.push_back(std::move(y));
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   std::vector<Permutation> sorted_elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

PermutationGroup PermutationGroup::generate(std::vector<Permutation> generators,
                                            std::size_t degree, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator " + format_element(g) + " has degree " +
                                                 std::to_string(g.degree()) + ", expected " +
                                                 std::to_string(degree));
    }
  }
  auto elements = closure(generators, degree, cap);
  return PermutationGroup(degree, std::move(generators), std::move(elements));
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) { return generate({}, degree); }

PermutationGroup PermutationGroup::from_elements(std::vector<Permutation> elements,
                                                 std::size_t degree) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw Error(ErrorCode::NotASubgroup, "empty element set");
  for (const auto& e : elements) {
    if (e.degree() != degree) throw Error(ErrorCode::DegreeMismatch, "element of wrong degree");
  }
  std::vector<Permutation> gens;
  std::vector<Permutation> current{Permutation(degree)};
  for (const auto& x : elements) {
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    try {
      current = closure(gens, degree, elements.size());
    } catch (const Error&) {
      throw Error(ErrorCode::NotASubgroup, "element set is not closed under composition");
    }
  }
  if (current != elements) {
    throw Error(ErrorCode::NotASubgroup, "element set is not closed under composition");
  }
  return PermutationGroup(degree, std::move(gens), std::move(current));
}

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PermutationGroup::index_or_throw(const Permutation& p) const {
  auto idx = index_of(p);
  if (!idx) throw Error(ErrorCode::NotAMember, format_element(p) + " is not in the group");
  return *idx;
}

std::size_t PermutationGroup::multiply(std::size_t i, std::size_t j) const {
  return index_.at(elements_[i] * elements_[j]);
}

std::size_t PermutationGroup::inverse(std::size_t i) const {
  return index_.at(elements_[i].inverse());
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const {
  std::vector<Point> parent(degree_);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators_) {
    for (Point x = 0; x < degree_; ++x) {
      Point a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Point>> result;
  std::vector<std::size_t> slot(degree_, static_cast<std::size_t>(-1));
  for (Point x = 0; x < degree_; ++x) {
    Point r = find(x);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = result.size();
      result.emplace_back();
    }
    result[slot[r]].push_back(x);
  }
  return result;
}

std::vector<Point> PermutationGroup::support() const {
  std::vector<bool> moved(degree_, false);
  for (const auto& g : generators_) {
    for (auto x : g.support()) moved[x] = true;
  }
  std::vector<Point> s;
  for (Point x = 0; x < degree_; ++x) {
    if (moved[x]) s.push_back(x);
  }
  return s;
}

bool PermutationGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = a + 1; b < generators_.size(); ++b) {
      if (generators_[a] * generators_[b] != generators_[b] * generators_[a]) return false;
    }
  }
  return true;
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& g) const {
  if (degree_ != g.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Permutation& x) { return g.contains(x); });
}

std::vector<Permutation> reduce_generators(const std::vector<Permutation>& generators,
                                           std::size_t degree) {
  std::vector<Permutation> kept;
  std::vector<Permutation> current{Permutation(degree)};
  for (const auto& g : generators) {
    if (std::binary_search(current.begin(), current.end(), g)) continue;
    kept.push_back(g);
    current = closure(kept, degree, kDefaultElementCap * 100);
  }
  return kept;
}

// ---------------------------------------------------------------------------

PartitionOfN::PartitionOfN(std::vector<std::vector<Point>> blocks, std::size_t degree)
    : blocks_(std::move(blocks)), block_of_(degree, static_cast<std::size_t>(-1)), degree_(degree) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw Error(ErrorCode::InvalidArgument, "empty block in partition");
    std::sort(blocks_[b].begin(), blocks_[b].end());
    for (auto x : blocks_[b]) {
      if (x >= degree) throw Error(ErrorCode::OutOfRange, "partition point exceeds degree");
      if (block_of_[x] != static_cast<std::size_t>(-1)) {
        throw Error(ErrorCode::RepeatedPoint, "partition blocks overlap");
      }
      block_of_[x] = b;
    }
  }
  for (auto b : block_of_) {
    if (b == static_cast<std::size_t>(-1)) {
      throw Error(ErrorCode::InvalidArgument, "partition blocks do not cover all points");
    }
  }
}

std::vector<PartitionOfN> PartitionOfN::all(std::size_t degree) {
  std::vector<PartitionOfN> result;
  if (degree == 0) {
    result.emplace_back(std::vector<std::vector<Point>>{}, 0);
    return result;
  }
  // Restricted growth strings a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(degree, 0), prefix_max(degree, 0);
  while (true) {
    std::size_t nblocks = prefix_max.back() + 1;
    std::vector<std::vector<Point>> blocks(nblocks);
    for (std::size_t i = 0; i < degree; ++i) blocks[a[i]].push_back(static_cast<Point>(i));
    result.emplace_back(std::move(blocks), degree);

    std::size_t i = degree - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < degree; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

std::vector<Subelement> subelements(const Permutation& g, const PermutationGroup& group) {
  group.index_or_throw(g);
  const auto cycles = cycle_decomposition(g).cycles;
  std::vector<bool> in_support(g.degree(), false);
  for (const auto& c : cycles) {
    for (auto x : c.entries) in_support[x] = true;
  }

  std::vector<Subelement> result;
  for (const auto& h : group.elements()) {
    bool ok = true;
    for (Point x = 0; ok && x < h.degree(); ++x) {
      if (!in_support[x] && h(x) != x) ok = false;
    }
    for (const auto& c : cycles) {
      if (!ok) break;
      const bool fixed = h(c.entries.front()) == c.entries.front();
      for (auto x : c.entries) {
        if (h(x) != (fixed ? x : g(x))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    Subelement::Kind kind = Subelement::Kind::Proper;
    if (h.is_identity()) {
      kind = Subelement::Kind::Identity;
    } else if (h == g) {
      kind = Subelement::Kind::Whole;
    }
    result.push_back({h, kind});
  }
  return result;
}

bool is_indecomposable(const Permutation& g, const PermutationGroup& group) {
  group.index_or_throw(g);
  if (g.is_identity()) throw Error(ErrorCode::IdentityInput, "identity has no decomposition");
  return subelements(g, group).size() == 2;
}

Permutation regular_image(const PermutationGroup& group, std::size_t i) {
  const Permutation inv = group.element(i).inverse();
  std::vector<Point> images(group.order());
  for (std::size_t j = 0; j < group.order(); ++j) {
    images[j] = static_cast<Point>(group.index_of(group.element(j) * inv).value());
  }
  return Permutation::from_images(std::move(images));
}

PermutationGroup regular_representation(const PermutationGroup& group) {
  std::vector<Permutation> gens;
  for (const auto& s : group.generators()) {
    gens.push_back(regular_image(group, group.index_or_throw(s)));
  }
  return PermutationGroup::generate(std::move(gens), group.order());
}

Permutation shift(const Permutation& p, std::size_t offset, std::size_t degree) {
  if (offset + p.degree() > degree) throw Error(ErrorCode::OutOfRange, "shift exceeds degree");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (Point x = 0; x < p.degree(); ++x) images[offset + x] = static_cast<Point>(offset + p(x));
  return Permutation::from_images(std::move(images));
}

PermutationGroup embed_product(const PermutationGroup& g, const PermutationGroup& h,
                               EmbedMode mode) {
  const std::size_t m = g.degree(), n = h.degree();
  std::vector<Permutation> gens;
  if (mode == EmbedMode::Disjoint) {
    for (const auto& s : g.generators()) gens.push_back(shift(s, 0, m + n));
    for (const auto& s : h.generators()) gens.push_back(shift(s, m, m + n));
    return PermutationGroup::generate(std::move(gens), m + n);
  }
  if (!(g == h)) {
    throw Error(ErrorCode::DegreeMismatch, "diagonal embedding requires identical groups");
  }
  for (const auto& s : g.generators()) gens.push_back(shift(s, 0, 2 * m) * shift(s, m, 2 * m));
  return PermutationGroup::generate(std::move(gens), 2 * m);
}

PyramidGroup pyramid_group(const PermutationGroup& group) {
  const std::size_t n = group.degree();
  PermutationGroup diag = embed_product(group, group, EmbedMode::Diagonal);
  std::vector<Point> images(2 * n);
  for (Point x = 0; x < n; ++x) {
    images[x] = static_cast<Point>(x + n);
    images[x + n] = x;
  }
  Permutation apex = Permutation::from_images(std::move(images));
  std::vector<Permutation> gens = diag.generators();
  gens.push_back(apex);
  PyramidGroup out{PermutationGroup::generate(std::move(gens), 2 * n), apex, diag.elements()};
  out.face_subset.push_back(apex);
  std::sort(out.face_subset.begin(), out.face_subset.end());
  return out;
}

PermutationGroup stabilizer(const PermutationGroup& group, const PartitionOfN& partition) {
  if (partition.degree() != group.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "partition degree differs from group degree");
  }
  std::vector<Permutation> kept;
  for (const auto& s : group.elements()) {
    bool ok = true;
    for (Point x = 0; ok && x < s.degree(); ++x) {
      ok = partition.block_of(s(x)) == partition.block_of(x);
    }
    if (ok) kept.push_back(s);
  }
  return PermutationGroup::from_elements(std::move(kept), group.degree());
}

PartitionOfN orbit_partition(const PermutationGroup& group) {
  return PartitionOfN(group.orbits(), group.degree());
}

std::vector<PermutationGroup> subgroups(const PermutationGroup& group, std::size_t cap) {
  const std::size_t m = group.order();
  if (m > cap) {
    throw Error(ErrorCode::CapExceeded, "subgroup enumeration limited to groups of order " +
                                            std::to_string(cap));
  }
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i][j] = group.multiply(i, j);
  }
  auto close = [&](const std::vector<std::size_t>& gens) {
    std::vector<bool> in(m, false);
    std::vector<std::size_t> members{0};
    in[0] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (auto s : gens) {
        auto y = table[members[head]][s];
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    return in;
  };

  struct Entry {
    std::vector<bool> members;
    std::vector<std::size_t> gens;
  };
  std::vector<Entry> found;
  std::set<std::vector<bool>> seen;
  auto add = [&](std::vector<std::size_t> gens) {
    auto members = close(gens);
    if (seen.insert(members).second) found.push_back({std::move(members), std::move(gens)});
  };
  for (std::size_t i = 0; i < m; ++i) add({i});
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto gens = found[i].gens;
      gens.insert(gens.end(), found[j].gens.begin(), found[j].gens.end());
      add(std::move(gens));
    }
  }

  std::vector<std::vector<std::size_t>> index_sets;
  for (const auto& e : found) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) {
      if (e.members[i]) idx.push_back(i);
    }
    index_sets.push_back(std::move(idx));
  }
  std::sort(index_sets.begin(), index_sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::vector<PermutationGroup> result;
  for (const auto& idx : index_sets) {
    std::vector<Permutation> elems;
    for (auto i : idx) elems.push_back(group.element(i));
    result.push_back(PermutationGroup::from_elements(std::move(elems), group.degree()));
  }
  return result;
}

}  // namespace permpoly
