#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace permpoly {

/// Fixed-size set of vertex indices {0..size-1}, stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static VertexSet full(std::size_t size) {
    VertexSet s(size);
    for (std::size_t i = 0; i < size; ++i) s.insert(i);
    return s;
  }

  static VertexSet from_indices(std::size_t size, const std::vector<std::size_t>& idx) {
    VertexSet s(size);
    for (auto i : idx) s.insert(i);
    return s;
  }

  std::size_t size() const noexcept { return size_; }

  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  /// Complement within {0..size-1}.
  VertexSet complement() const {
    VertexSet c(size_);
    for (std::size_t k = 0; k < words_.size(); ++k) c.words_[k] = ~words_[k];
    if (size_ & 63) c.words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    return c;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Orders by the ascending index lists, lexicographically.
  friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.indices() < b.indices(); }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace permpoly

template <>
struct std::hash<permpoly::VertexSet> {
  std::size_t operator()(const permpoly::VertexSet& s) const noexcept {
    std::size_t h = 1469598103934665603ull ^ s.size();
    for (auto w : s.words()) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }
};
