#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "raagqi/graph.hpp"

namespace raagqi {

/// A bijection from the vertices of one graph to another: `map[v]` is the
/// image of vertex v.
using VertexMap = std::vector<Vertex>;

/// First adjacency-preserving bijection in canonical search order, or
/// nullopt. When colour vectors are given the bijection must also preserve
/// colours; pinning a vertex is done by giving it a colour of its own.
std::optional<VertexMap> find_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b);
std::optional<VertexMap> find_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b,
                                          const std::vector<std::uint32_t>& colours_a,
                                          const std::vector<std::uint32_t>& colours_b);

/// Label form of a witness: label in `a` -> label in `b`.
std::map<std::string, std::string> witness_labels(const SimplicialGraph& a,
                                                  const SimplicialGraph& b,
                                                  const VertexMap& map);

/// True iff `map` is a bijection preserving adjacency and non-adjacency.
bool verify_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b, const VertexMap& map);

inline bool graph_isomorphic(const SimplicialGraph& a, const SimplicialGraph& b) {
  return find_isomorphism(a, b).has_value();
}

/// |Aut(g)| computed through a stabiliser chain.
std::uint64_t automorphism_count(const SimplicialGraph& g);

}  // namespace raagqi
