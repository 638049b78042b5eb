#include "raagqi/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace raagqi {

SimplicialGraph SimplicialGraph::from_labels(std::vector<std::string> vertices,
                                             const std::vector<LabelEdge>& edges) {
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
    throw GraphError("repeated vertex '" + *dup + "'");
  }
  if (vertices.size() > kMaxVertices) {
    throw GraphError("graph has " + std::to_string(vertices.size()) +
                     " vertices; at most " + std::to_string(kMaxVertices) + " are supported");
  }
  for (const auto& l : vertices) {
    if (l.empty()) throw GraphError("empty vertex label");
  }

  SimplicialGraph g;
  g.labels_ = std::move(vertices);
  g.adjacency_.assign(g.labels_.size(), VertexSet{});
  for (const auto& [a, b] : edges) {
    if (a == b) throw GraphError("self-loop at '" + a + "'");
    auto ia = g.find(a);
    auto ib = g.find(b);
    if (!ia) throw GraphError("edge endpoint '" + a + "' is not a declared vertex");
    if (!ib) throw GraphError("edge endpoint '" + b + "' is not a declared vertex");
    if (g.adjacency_[*ia].contains(*ib)) {
      throw GraphError("duplicate edge '" + a + "' - '" + b + "'");
    }
    g.adjacency_[*ia].insert(*ib);
    g.adjacency_[*ib].insert(*ia);
  }
  return g;
}

SimplicialGraph SimplicialGraph::from_edges(const std::vector<LabelEdge>& edges,
                                            std::vector<std::string> isolated) {
  std::set<std::string> names(isolated.begin(), isolated.end());
  for (const auto& [a, b] : edges) {
    names.insert(a);
    names.insert(b);
  }
  return from_labels({names.begin(), names.end()}, edges);
}

std::size_t SimplicialGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto n : adjacency_) twice += n.size();
  return twice / 2;
}

const std::string& SimplicialGraph::label(Vertex v) const {
  check_vertex(*this, v);
  return labels_[v];
}

std::optional<Vertex> SimplicialGraph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Vertex SimplicialGraph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw GraphError("unknown vertex '" + std::string(label) + "'");
}

std::vector<std::pair<Vertex, Vertex>> SimplicialGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a = 0; a < order(); ++a) {
    for (Vertex b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<LabelEdge> SimplicialGraph::label_edges() const {
  std::vector<LabelEdge> out;
  for (auto [a, b] : edges()) out.emplace_back(labels_[a], labels_[b]);
  return out;
}

std::vector<std::string> SimplicialGraph::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(label(v));
  return out;
}

VertexSet SimplicialGraph::set_of(const std::vector<std::string>& labels) const {
  VertexSet s;
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

void check_vertex(const SimplicialGraph& g, Vertex v) {
  if (v >= g.order()) throw GraphError("unknown vertex index " + std::to_string(v));
}

void check_subset(const SimplicialGraph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw GraphError("vertex set is not a subset of the graph");
}

VertexSet link(const SimplicialGraph& g, Vertex v) {
  check_vertex(g, v);
  return g.neighbors(v);
}

VertexSet star(const SimplicialGraph& g, Vertex v) {
  check_vertex(g, v);
  return g.neighbors(v) | VertexSet::single(v);
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, VertexSet s) {
  check_subset(g, s);
  std::vector<LabelEdge> edges;
  for (Vertex a : s) {
    for (Vertex b : g.neighbors(a) & s) {
      if (a < b) edges.emplace_back(g.label(a), g.label(b));
    }
  }
  return SimplicialGraph::from_labels(g.labels_of(s), edges);
}

std::vector<VertexSet> components_within(const SimplicialGraph& g, VertexSet within) {
  check_subset(g, within);
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = (next & within) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> components_minus(const SimplicialGraph& g, VertexSet s) {
  check_subset(g, s);
  return components_within(g, g.vertices() - s);
}

bool is_connected_within(const SimplicialGraph& g, VertexSet within) {
  return components_within(g, within).size() == 1;
}

bool is_connected(const SimplicialGraph& g) { return is_connected_within(g, g.vertices()); }

std::vector<std::vector<int>> distance_matrix(const SimplicialGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kUnreachable));
  for (Vertex s = 0; s < n; ++s) {
    std::deque<Vertex> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[s][w] == kUnreachable) {
          dist[s][w] = dist[s][u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

namespace {

// Bron-Kerbosch with Tomita pivoting.
void bron_kerbosch(const SimplicialGraph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  Vertex pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  for (Vertex u : p | x) {
    std::size_t c = (p & g.neighbors(u)).size();
    if (!have_pivot || c > best) {
      pivot = u;
      best = c;
      have_pivot = true;
    }
  }
  for (Vertex v : p - g.neighbors(pivot)) {
    bron_kerbosch(g, r | VertexSet::single(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const SimplicialGraph& g) {
  std::vector<VertexSet> out;
  if (g.empty()) return out;
  bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::size_t clique_number(const SimplicialGraph& g) {
  std::size_t best = 0;
  for (auto c : maximal_cliques(g)) best = std::max(best, c.size());
  return best;
}

bool is_clique(const SimplicialGraph& g, VertexSet s) {
  for (Vertex v : s) {
    if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

SimplicialGraph complement(const SimplicialGraph& g) {
  std::vector<LabelEdge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (!g.adjacent(a, b)) edges.emplace_back(g.label(a), g.label(b));
    }
  }
  return SimplicialGraph::from_labels(g.labels(), edges);
}

JoinDecomposition join_decomposition(const SimplicialGraph& g) {
  JoinDecomposition out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (star(g, v) == g.vertices()) out.clique_factor.insert(v);
  }
  // Components of the complement restricted to the rest.
  SimplicialGraph co = complement(g);
  out.irreducible_factors = components_within(co, g.vertices() - out.clique_factor);
  return out;
}

SimplicialGraph relabel(const SimplicialGraph& g,
                        const std::map<std::string, std::string>& mapping) {
  std::vector<std::string> names;
  for (const auto& l : g.labels()) {
    auto it = mapping.find(l);
    if (it == mapping.end()) throw GraphError("relabelling does not cover '" + l + "'");
    names.push_back(it->second);
  }
  std::vector<LabelEdge> edges;
  for (const auto& [a, b] : g.label_edges()) edges.emplace_back(mapping.at(a), mapping.at(b));
  return SimplicialGraph::from_labels(std::move(names), edges);
}

SimplicialGraph graph_union(const SimplicialGraph& a, const SimplicialGraph& b) {
  std::set<std::string> names(a.labels().begin(), a.labels().end());
  names.insert(b.labels().begin(), b.labels().end());
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto* g : {&a, &b}) {
    for (auto [x, y] : g->label_edges()) {
      if (y < x) std::swap(x, y);
      edges.emplace(x, y);
    }
  }
  return SimplicialGraph::from_labels({names.begin(), names.end()}, {edges.begin(), edges.end()});
}

}  // namespace raagqi
