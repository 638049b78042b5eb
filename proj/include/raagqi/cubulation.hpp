#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "raagqi/graph.hpp"
#include "raagqi/prime_partition.hpp"

namespace raagqi {

enum class Side : std::uint8_t { low = 0, high = 1 };

/// A halfspace at a non-prime base vertex. With prime factors c_1..c_d at the
/// base, the low side of cut m is St(base) + c_1..c_m and the high side is
/// St(base) + c_{m+1}..c_d.
///
/// Identity is (base, cut, side); two halfspaces at different bases are
/// distinct even when their extents coincide.
struct Halfspace {
  Vertex base = 0;
  std::size_t cut = 1;
  Side side = Side::low;
  VertexSet extent;
};

/// Halfspace ids are 2 * wall + side, so the involution is `id ^ 1`.
inline constexpr std::size_t complement_of(std::size_t id) { return id ^ 1U; }
inline constexpr std::size_t wall_of(std::size_t id) { return id / 2; }
inline constexpr std::size_t halfspace_id(std::size_t wall, Side side) {
  return 2 * wall + static_cast<std::size_t>(side);
}

/// The finite pocset of halfspaces built from the prime partitions of a type
/// II graph, with precomputed order and compatibility tables.
class Pocset {
 public:
  const SimplicialGraph& graph() const { return graph_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const Halfspace& halfspace(std::size_t id) const { return halfspaces_.at(id); }
  std::size_t size() const { return halfspaces_.size(); }
  std::size_t wall_count() const { return halfspaces_.size() / 2; }
  /// Prime partition records of the base vertices, indexed by vertex.
  const std::vector<PrimePartitionRecord>& partitions() const { return partitions_; }

  /// (v1, H1) <= (v2, H2) iff d(v1, v2) != 1 and H1 is contained in H2.
  bool leq(std::size_t a, std::size_t b) const { return order_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && order_[a][b]; }
  /// Compatible iff d(v1, v2) = 1 or H1 & H2 is not inside St(v1).
  bool compatible(std::size_t a, std::size_t b) const { return compatible_[a][b]; }
  bool bases_adjacent(std::size_t a, std::size_t b) const;
  int base_distance(std::size_t a, std::size_t b) const;

  /// Walls are transverse when none of the four strict relations between
  /// their halfspaces holds.
  bool walls_transverse(std::size_t wall_a, std::size_t wall_b) const;

  /// Checks the pocset axioms and the compatibility characterisation;
  /// returns one message per violation.
  std::vector<std::string> axiom_violations() const;

 private:
  friend Pocset build_pocset(const SimplicialGraph& g, const PartitionPolicy& policy);

  SimplicialGraph graph_;
  std::vector<std::vector<int>> distance_;
  std::vector<PrimePartitionRecord> partitions_;
  std::vector<Halfspace> halfspaces_;
  std::vector<std::vector<bool>> order_;
  std::vector<std::vector<bool>> compatible_;
};

/// d - 1 walls for every vertex with d prime factors. Requires a type II
/// graph (PreconditionError otherwise). Throws InvariantError when the
/// resulting tables violate the pocset axioms.
Pocset build_pocset(const SimplicialGraph& g, const PartitionPolicy& policy = {});

/// One chosen side per wall.
struct Ultrafilter {
  std::vector<Side> choices;

  std::size_t chosen(std::size_t wall) const { return halfspace_id(wall, choices[wall]); }
  bool contains(std::size_t id) const { return choices[wall_of(id)] == static_cast<Side>(id & 1U); }
  auto operator<=>(const Ultrafilter&) const = default;
};

/// Exactly one side per wall and upward closed.
bool is_ultrafilter(const Pocset& p, const Ultrafilter& u);

/// Halfspaces of u that are minimal in u.
std::vector<std::size_t> minimal_elements(const Pocset& p, const Ultrafilter& u);

/// Ultrafilter whose halfspaces all contain `clique` (a clique of the
/// graph), built along a tight filtration of the non-prime vertices.
Ultrafilter seed_ultrafilter(const Pocset& p, VertexSet clique);

/// Every ultrafilter, found by flipping minimal elements breadth-first from
/// the seed of the least vertex. Sorted.
std::vector<Ultrafilter> ultrafilters(const Pocset& p);

/// Intersection of the extents chosen by u (all vertices for an empty pocset).
VertexSet phi(const Pocset& p, const Ultrafilter& u);

struct CubeEdge {
  std::size_t from;
  std::size_t to;
  std::size_t wall;
};

struct CubeSquare {
  std::array<std::size_t, 4> corners;  // x, x.a, x.a.b, x.b
  std::array<std::size_t, 2> walls;
};

/// Cube complex dual to a finite pocset, kept to its 2-skeleton.
struct CubeComplex {
  std::vector<Ultrafilter> vertices;
  std::vector<CubeEdge> edges;
  std::vector<CubeSquare> squares;
  std::vector<VertexSet> phi;

  std::vector<std::vector<std::size_t>> adjacency() const;
};

/// Vertices are the ultrafilters, edges single minimal flips, squares pairs of
/// commuting flips. Throws InvariantError when a duality invariant fails.
CubeComplex dual_complex(const Pocset& p);

/// All duality invariants: Phi nonempty and covering, connected median
/// 1-skeleton, edges are minimal flips, walls cross exactly when their bases
/// are adjacent.
std::vector<std::string> duality_violations(const Pocset& p, const CubeComplex& x);

/// Exhaustive check that every vertex triple has exactly one median.
bool is_median_graph(const std::vector<std::vector<std::size_t>>& adjacency);

struct PrimeGraphResult {
  SimplicialGraph prime_graph;
  std::size_t index = 1;
  /// Phi of each complex vertex, parallel to complex.vertices.
  std::vector<VertexSet> phi_table;
  Pocset pocset;
  CubeComplex complex;
};

/// The prime graph and commensurability index of a type II graph: the full
/// subgraph on Phi of the least ultrafilter, and the number of ultrafilters.
/// Asserts that every Phi gives an isomorphic graph and that the result is a
/// prime type II graph.
PrimeGraphResult prime_graph(const SimplicialGraph& g, const PartitionPolicy& policy = {});

}  // namespace raagqi
