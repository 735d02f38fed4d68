#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lpi {

using Vertex = std::uint32_t;

/// Subset of {0, ..., universe-1}, stored as a packed bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

  /// Members in increasing order.
  std::vector<Vertex> to_vector() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        fn(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  void require_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace lpi
