#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raagqi/errors.hpp"
#include "raagqi/vertex_set.hpp"

namespace raagqi {

using LabelEdge = std::pair<std::string, std::string>;

/// Finite simple graph with string-labelled vertices.
///
/// Vertices are stored in lexicographic label order and addressed by their
/// index in that order. Every tie-break in the library ("least vertex",
/// "first component") refers to this order.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Builds a graph from labels and label pairs. Vertices may be listed in
  /// any order. Throws GraphError on a self-loop, a repeated edge, a repeated
  /// vertex, an endpoint that is not in `vertices`, or more than kMaxVertices
  /// vertices.
  static SimplicialGraph from_labels(std::vector<std::string> vertices,
                                     const std::vector<LabelEdge>& edges);

  /// Convenience constructor that declares every edge endpoint plus the
  /// optional isolated vertices.
  static SimplicialGraph from_edges(const std::vector<LabelEdge>& edges,
                                    std::vector<std::string> isolated = {});

  std::size_t order() const { return labels_.size(); }
  std::size_t edge_count() const;
  bool empty() const { return labels_.empty(); }

  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Like find() but throws GraphError("unknown vertex ...").
  Vertex index_of(std::string_view label) const;

  bool adjacent(Vertex a, Vertex b) const { return adjacency_[a].contains(b); }
  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  VertexSet vertices() const { return VertexSet::first_n(order()); }

  /// Edges (a, b) with a < b, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::vector<LabelEdge> label_edges() const;

  std::vector<std::string> labels_of(VertexSet s) const;
  VertexSet set_of(const std::vector<std::string>& labels) const;

  bool operator==(const SimplicialGraph& other) const {
    return labels_ == other.labels_ && adjacency_ == other.adjacency_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> adjacency_;
};

/// Splitting of a graph as a join (De Rham factors of X(G)).
struct JoinDecomposition {
  /// Vertices adjacent to every other vertex (the free abelian factor).
  VertexSet clique_factor;
  /// Connected components of the complement graph on the remaining vertices.
  std::vector<VertexSet> irreducible_factors;
};

void check_vertex(const SimplicialGraph& g, Vertex v);
void check_subset(const SimplicialGraph& g, VertexSet s);

VertexSet link(const SimplicialGraph& g, Vertex v);
VertexSet star(const SimplicialGraph& g, Vertex v);

/// Graph on `s` with every edge of `g` internal to `s`. Labels are kept.
SimplicialGraph induced_subgraph(const SimplicialGraph& g, VertexSet s);

/// Connected components of the full subgraph on vertices(g) \ s, ordered by
/// least vertex.
std::vector<VertexSet> components_minus(const SimplicialGraph& g, VertexSet s);

/// Components of the full subgraph spanned by `within`.
std::vector<VertexSet> components_within(const SimplicialGraph& g, VertexSet within);

/// True iff the graph has exactly one component. The empty graph is not
/// connected.
bool is_connected(const SimplicialGraph& g);
bool is_connected_within(const SimplicialGraph& g, VertexSet within);

/// All-pairs graph distances; unreachable pairs hold kUnreachable.
inline constexpr int kUnreachable = -1;
std::vector<std::vector<int>> distance_matrix(const SimplicialGraph& g);

/// Inclusion-maximal cliques, in canonical set order.
std::vector<VertexSet> maximal_cliques(const SimplicialGraph& g);
std::size_t clique_number(const SimplicialGraph& g);
bool is_clique(const SimplicialGraph& g, VertexSet s);

JoinDecomposition join_decomposition(const SimplicialGraph& g);

/// Complement graph with the same labels.
SimplicialGraph complement(const SimplicialGraph& g);

/// Renames vertices. `mapping` must be a bijection from the current labels
/// to a set of distinct new labels.
SimplicialGraph relabel(const SimplicialGraph& g,
                        const std::map<std::string, std::string>& mapping);

/// Disjoint union of the two label sets with the union of edges. Shared
/// labels are identified; this is how gluing is expressed.
SimplicialGraph graph_union(const SimplicialGraph& a, const SimplicialGraph& b);

}  // namespace raagqi
