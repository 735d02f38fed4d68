#include "lpi/vertex_set.hpp"

#include <string>

#include "lpi/error.hpp"

namespace lpi {

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members) {
  return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (auto v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
  if (auto tail = universe % 64; tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside universe of size " +
                          std::to_string(universe_));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw InvalidArgument("vertex sets over different universes");
  }
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

}  // namespace lpi
