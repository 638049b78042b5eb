#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raagqi/graph.hpp"

namespace raagqi {

using VertexPair = std::pair<Vertex, Vertex>;

/// Separation classes of a defining graph.
///
/// Disconnected (and empty) graphs are never weak type II, type II or weak
/// type I; `connected` records why.
struct TypeReport {
  bool connected = false;
  VertexSet separating_star_vertices;
  bool weak_type_II = false;
  bool type_II = false;
  bool weak_type_I = false;
  /// Pairs v < w at distance 2 whose closed stars together contain every
  /// vertex and every edge.
  std::vector<VertexPair> star_cover_pairs;

  /// First pair (canonical order) whose link intersection separates, if any.
  std::optional<VertexPair> weak_type_II_witness;
  std::optional<VertexPair> type_II_witness;
};

/// Vertices v for which G \ St(v) has at least two components.
VertexSet separating_stars(const SimplicialGraph& g);

/// True iff G \ S induces a connected graph (an empty remainder counts as
/// connected: nothing is separated).
bool removal_leaves_connected(const SimplicialGraph& g, VertexSet s);

std::optional<VertexPair> weak_type_II_violation(const SimplicialGraph& g);
std::optional<VertexPair> type_II_violation(const SimplicialGraph& g);

bool is_weak_type_II(const SimplicialGraph& g);
bool is_type_II(const SimplicialGraph& g);

/// True iff St(v) and St(w), taken as full subgraphs, together contain every
/// vertex and every edge of g.
bool stars_cover(const SimplicialGraph& g, Vertex v, Vertex w);
std::vector<VertexPair> star_cover_pairs(const SimplicialGraph& g);

/// Weak type I through the star-cover formulation: connected, no separating
/// closed star, and no distance-2 pair whose stars cover the graph.
bool weak_type_I_by_star_cover(const SimplicialGraph& g);
/// Weak type I as weak type II with no separating closed star.
bool weak_type_I_by_weak_type_II(const SimplicialGraph& g);

/// Computes both formulations and throws InvariantError if they disagree.
bool is_weak_type_I(const SimplicialGraph& g);

TypeReport classify(const SimplicialGraph& g);

/// Intersection of the maximal cliques containing w. Requires a weak type I
/// graph (throws PreconditionError "not weak type I" otherwise).
VertexSet minimal_stable_subgraph(const SimplicialGraph& g, Vertex w);

}  // namespace raagqi
