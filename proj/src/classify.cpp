#include "raagqi/classify.hpp"

namespace raagqi {

VertexSet separating_stars(const SimplicialGraph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (components_minus(g, star(g, v)).size() >= 2) out.insert(v);
  }
  return out;
}

bool removal_leaves_connected(const SimplicialGraph& g, VertexSet s) {
  return components_minus(g, s).size() <= 1;
}

namespace {

// First pair v < w (at exactly distance 2 when `only_distance_two`) whose
// link intersection separates g.
std::optional<VertexPair> separating_link_pair(const SimplicialGraph& g, bool only_distance_two) {
  const auto dist = distance_matrix(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = v + 1; w < g.order(); ++w) {
      if (only_distance_two && dist[v][w] != 2) continue;
      if (!removal_leaves_connected(g, link(g, v) & link(g, w))) return VertexPair{v, w};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexPair> weak_type_II_violation(const SimplicialGraph& g) {
  return separating_link_pair(g, true);
}

std::optional<VertexPair> type_II_violation(const SimplicialGraph& g) {
  return separating_link_pair(g, false);
}

bool is_weak_type_II(const SimplicialGraph& g) {
  return is_connected(g) && !weak_type_II_violation(g);
}

bool is_type_II(const SimplicialGraph& g) { return is_connected(g) && !type_II_violation(g); }

bool stars_cover(const SimplicialGraph& g, Vertex v, Vertex w) {
  const VertexSet sv = star(g, v);
  const VertexSet sw = star(g, w);
  if ((sv | sw) != g.vertices()) return false;
  for (auto [a, b] : g.edges()) {
    VertexSet e = VertexSet::of({a, b});
    if (!e.is_subset_of(sv) && !e.is_subset_of(sw)) return false;
  }
  return true;
}

std::vector<VertexPair> star_cover_pairs(const SimplicialGraph& g) {
  std::vector<VertexPair> out;
  const auto dist = distance_matrix(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = v + 1; w < g.order(); ++w) {
      if (dist[v][w] == 2 && stars_cover(g, v, w)) out.emplace_back(v, w);
    }
  }
  return out;
}

bool weak_type_I_by_star_cover(const SimplicialGraph& g) {
  return is_connected(g) && separating_stars(g).empty() && star_cover_pairs(g).empty();
}

bool weak_type_I_by_weak_type_II(const SimplicialGraph& g) {
  return is_weak_type_II(g) && separating_stars(g).empty();
}

bool is_weak_type_I(const SimplicialGraph& g) {
  const bool by_cover = weak_type_I_by_star_cover(g);
  const bool by_weak_ii = weak_type_I_by_weak_type_II(g);
  if (by_cover != by_weak_ii) {
    throw InvariantError("weak type I formulations disagree (star cover: " +
                         std::string(by_cover ? "true" : "false") +
                         ", weak type II without separating star: " +
                         std::string(by_weak_ii ? "true" : "false") + ")");
  }
  return by_cover;
}

TypeReport classify(const SimplicialGraph& g) {
  TypeReport r;
  r.connected = is_connected(g);
  r.separating_star_vertices = separating_stars(g);
  r.star_cover_pairs = star_cover_pairs(g);
  r.weak_type_II_witness = weak_type_II_violation(g);
  r.type_II_witness = type_II_violation(g);
  r.weak_type_II = r.connected && !r.weak_type_II_witness;
  r.type_II = r.connected && !r.type_II_witness;
  r.weak_type_I = is_weak_type_I(g);
  if (r.type_II && !r.weak_type_II) throw InvariantError("type II graph is not weak type II");
  return r;
}

VertexSet minimal_stable_subgraph(const SimplicialGraph& g, Vertex w) {
  check_vertex(g, w);
  if (!is_weak_type_I(g)) throw PreconditionError("not weak type I");
  VertexSet out = g.vertices();
  for (auto c : maximal_cliques(g)) {
    if (c.contains(w)) out &= c;
  }
  return out;
}

}  // namespace raagqi
