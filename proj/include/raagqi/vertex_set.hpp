#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace raagqi {

/// Index of a vertex in a SimplicialGraph. Indices follow the canonical
/// (lexicographic) label order of the owning graph.
using Vertex = std::uint32_t;

/// Graphs are limited to this many vertices so that vertex sets fit in a
/// single machine word.
inline constexpr std::size_t kMaxVertices = 64;

/// A subset of the vertices of one graph, stored as a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr VertexSet single(Vertex v) { return from_bits(std::uint64_t{1} << v); }
  /// The set {0, ..., n-1}.
  static constexpr VertexSet first_n(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  /// Least element; the set must be nonempty.
  constexpr Vertex front() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order on vertex sets: lexicographic comparison of the sorted
/// element lists. For disjoint sets this orders by least element.
inline bool canonical_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

}  // namespace raagqi
