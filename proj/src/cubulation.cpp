#include "raagqi/cubulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "raagqi/classify.hpp"
#include "raagqi/isomorphism.hpp"

namespace raagqi {
namespace {

// Above this many complex vertices the exhaustive median check inside
// dual_complex is skipped; the check is quartic in the vertex count.
constexpr std::size_t kMedianCheckLimit = 96;

std::string describe(const Pocset& p, std::size_t id) {
  const Halfspace& h = p.halfspace(id);
  std::ostringstream out;
  out << '(' << p.graph().label(h.base) << ", cut " << h.cut << ", "
      << (h.side == Side::low ? "low" : "high") << ')';
  return out.str();
}

std::vector<std::vector<int>> all_pairs_bfs(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto w : adj[u]) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

Ultrafilter flipped(Ultrafilter u, std::size_t wall) {
  u.choices[wall] = u.choices[wall] == Side::low ? Side::high : Side::low;
  return u;
}

}  // namespace

bool Pocset::bases_adjacent(std::size_t a, std::size_t b) const { return base_distance(a, b) == 1; }

int Pocset::base_distance(std::size_t a, std::size_t b) const {
  return distance_[halfspaces_[a].base][halfspaces_[b].base];
}

bool Pocset::walls_transverse(std::size_t wall_a, std::size_t wall_b) const {
  if (wall_a == wall_b) return false;
  const std::size_t a = halfspace_id(wall_a, Side::low);
  const std::size_t b = halfspace_id(wall_b, Side::low);
  for (std::size_t x : {a, complement_of(a)}) {
    for (std::size_t y : {b, complement_of(b)}) {
      if (less(x, y) || less(y, x)) return false;
    }
  }
  return true;
}

std::vector<std::string> Pocset::axiom_violations() const {
  std::vector<std::string> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq(a, a)) out.push_back("not reflexive at " + describe(*this, a));
    const std::size_t ac = complement_of(a);
    if (leq(a, ac) || leq(ac, a)) {
      out.push_back("halfspace comparable with its complement: " + describe(*this, a));
    }
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t bc = complement_of(b);
      if (a != b && leq(a, b) && leq(b, a)) {
        out.push_back("antisymmetry fails: " + describe(*this, a) + " " + describe(*this, b));
      }
      if (leq(a, b) && !leq(bc, ac)) {
        out.push_back("involution does not reverse order: " + describe(*this, a) + " <= " +
                      describe(*this, b));
      }
      if (compatible(a, b) != compatible(b, a)) {
        out.push_back("compatibility not symmetric: " + describe(*this, a) + " " +
                      describe(*this, b));
      }
      const bool far = base_distance(a, b) != 1;
      const bool incompatible_by_order = far && leq(a, bc);
      const bool incompatible_by_order_swapped = far && leq(b, ac);
      if (compatible(a, b) == incompatible_by_order ||
          incompatible_by_order != incompatible_by_order_swapped) {
        out.push_back("compatibility does not match the order characterisation: " +
                      describe(*this, a) + " " + describe(*this, b));
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (leq(a, b) && leq(b, c) && !leq(a, c)) {
          out.push_back("transitivity fails: " + describe(*this, a) + " " + describe(*this, b) +
                        " " + describe(*this, c));
        }
      }
    }
  }
  // Same base, same side: totally ordered by cut.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Halfspace& ha = halfspaces_[a];
      const Halfspace& hb = halfspaces_[b];
      if (ha.base != hb.base || ha.side != hb.side) continue;
      const bool expected = ha.side == Side::low ? ha.cut <= hb.cut : ha.cut >= hb.cut;
      if (leq(a, b) != expected) {
        out.push_back("same-base halfspaces not ordered by cut: " + describe(*this, a) + " " +
                      describe(*this, b));
      }
    }
  }
  for (std::size_t w1 = 0; w1 < wall_count(); ++w1) {
    for (std::size_t w2 = w1 + 1; w2 < wall_count(); ++w2) {
      const std::size_t a = halfspace_id(w1, Side::low);
      const std::size_t b = halfspace_id(w2, Side::low);
      if (walls_transverse(w1, w2) != bases_adjacent(a, b)) {
        out.push_back("transversality does not match base adjacency: " + describe(*this, a) +
                      " " + describe(*this, b));
      }
    }
  }
  return out;
}

Pocset build_pocset(const SimplicialGraph& g, const PartitionPolicy& policy) {
  if (!is_type_II(g)) throw PreconditionError("graph is not of type II");
  Pocset p;
  p.graph_ = g;
  p.distance_ = distance_matrix(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    p.partitions_.push_back(prime_partition(g, v, policy));
    const PrimePartitionRecord& rec = p.partitions_.back();
    const VertexSet st = star(g, v);
    for (std::size_t cut = 1; cut < rec.d; ++cut) {
      VertexSet low = st;
      VertexSet high = st;
      for (std::size_t m = 0; m < rec.d; ++m) {
        (m < cut ? low : high) |= rec.factor_vertices(m);
      }
      p.halfspaces_.push_back({v, cut, Side::low, low});
      p.halfspaces_.push_back({v, cut, Side::high, high});
    }
  }
  const std::size_t n = p.halfspaces_.size();
  p.order_.assign(n, std::vector<bool>(n, false));
  p.compatible_.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    const Halfspace& ha = p.halfspaces_[a];
    for (std::size_t b = 0; b < n; ++b) {
      const Halfspace& hb = p.halfspaces_[b];
      const bool adjacent = p.distance_[ha.base][hb.base] == 1;
      p.order_[a][b] = !adjacent && ha.extent.is_subset_of(hb.extent);
      p.compatible_[a][b] = adjacent || !(ha.extent & hb.extent).is_subset_of(star(g, ha.base));
    }
  }
  if (auto bad = p.axiom_violations(); !bad.empty()) {
    throw InvariantError("pocset axioms fail: " + bad.front());
  }
  return p;
}

bool is_ultrafilter(const Pocset& p, const Ultrafilter& u) {
  if (u.choices.size() != p.wall_count()) return false;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!u.contains(a)) continue;
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(a, b) && !u.contains(b)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> minimal_elements(const Pocset& p, const Ultrafilter& u) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < p.wall_count(); ++w) {
    const std::size_t a = u.chosen(w);
    bool minimal = true;
    for (std::size_t v = 0; v < p.wall_count() && minimal; ++v) {
      if (p.less(u.chosen(v), a)) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

Ultrafilter seed_ultrafilter(const Pocset& p, VertexSet clique) {
  const SimplicialGraph& g = p.graph();
  if (!is_clique(g, clique)) throw GraphError("seed set is not a clique");

  VertexSet non_prime;
  for (const auto& h : p.halfspaces()) non_prime.insert(h.base);

  // Tight filtration: start from the clique, then repeatedly add a minimal
  // element of the remaining non-prime vertices.
  std::vector<Vertex> sequence = clique.to_vector();
  VertexSet placed = clique;
  auto component_of = [&](Vertex u, Vertex x) {
    for (auto c : components_minus(g, star(g, u))) {
      if (c.contains(x)) return c;
    }
    return VertexSet{};
  };
  auto tight_for = [&](VertexSet e, Vertex u) {
    VertexSet outside = e - star(g, u);
    return outside.empty() || outside.is_subset_of(component_of(u, outside.front()));
  };
  // u precedes w when some placed vertex lies in a different component of
  // G \ St(u) than w.
  auto precedes = [&](Vertex u, Vertex w) {
    if (star(g, u).contains(w)) return false;
    const VertexSet cw = component_of(u, w);
    return !(placed - star(g, u) - cw).empty();
  };
  while (!(non_prime - placed).empty()) {
    const VertexSet rest = non_prime - placed;
    std::optional<Vertex> pick;
    for (Vertex w : rest) {
      bool minimal = true;
      for (Vertex u : rest) {
        if (u != w && precedes(u, w)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        pick = w;
        break;
      }
    }
    if (!pick) throw InvariantError("tight filtration has no minimal element");
    placed.insert(*pick);
    sequence.push_back(*pick);
    for (Vertex u : non_prime - placed) {
      if (!tight_for(placed, u)) throw InvariantError("tight filtration step is not tight");
    }
  }

  Ultrafilter u;
  u.choices.assign(p.wall_count(), Side::low);
  VertexSet earlier;
  for (Vertex base : sequence) {
    const PrimePartitionRecord& rec = p.partitions()[base];
    if (!rec.prime()) {
      const VertexSet outside = earlier - star(g, base);
      const VertexSet target = outside.empty()
                                   ? rec.factors.front().front().component
                                   : component_of(base, outside.front());
      if (!outside.is_subset_of(target)) {
        throw InvariantError("earlier filtration vertices split at " + g.label(base));
      }
      std::size_t factor = 0;
      while (!target.is_subset_of(rec.factor_vertices(factor))) ++factor;
      for (std::size_t w = 0; w < p.wall_count(); ++w) {
        const Halfspace& h = p.halfspace(halfspace_id(w, Side::low));
        if (h.base != base) continue;
        u.choices[w] = factor < h.cut ? Side::low : Side::high;
      }
    }
    earlier.insert(base);
  }
  if (!is_ultrafilter(p, u) || !clique.is_subset_of(phi(p, u))) {
    throw InvariantError("seed ultrafilter construction failed");
  }
  return u;
}

std::vector<Ultrafilter> ultrafilters(const Pocset& p) {
  const VertexSet start = p.graph().empty() ? VertexSet{} : VertexSet::single(0);
  std::set<Ultrafilter> seen{seed_ultrafilter(p, start)};
  std::deque<Ultrafilter> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    Ultrafilter u = queue.front();
    queue.pop_front();
    for (std::size_t a : minimal_elements(p, u)) {
      Ultrafilter next = flipped(u, wall_of(a));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

VertexSet phi(const Pocset& p, const Ultrafilter& u) {
  VertexSet out = p.graph().vertices();
  for (std::size_t w = 0; w < p.wall_count(); ++w) out &= p.halfspace(u.chosen(w)).extent;
  return out;
}

std::vector<std::vector<std::size_t>> CubeComplex::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  return adj;
}

bool is_median_graph(const std::vector<std::vector<std::size_t>>& adjacency) {
  const std::size_t n = adjacency.size();
  if (n == 0) return false;
  const auto d = all_pairs_bfs(adjacency);
  for (std::size_t i = 0; i < n; ++i) {
    if (d[0][i] < 0) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t c = b; c < n; ++c) {
        std::size_t medians = 0;
        for (std::size_t m = 0; m < n && medians < 2; ++m) {
          if (d[a][m] + d[m][b] == d[a][b] && d[b][m] + d[m][c] == d[b][c] &&
              d[a][m] + d[m][c] == d[a][c]) {
            ++medians;
          }
        }
        if (medians != 1) return false;
      }
    }
  }
  return true;
}

CubeComplex dual_complex(const Pocset& p) {
  CubeComplex x;
  x.vertices = ultrafilters(p);
  std::map<Ultrafilter, std::size_t> index;
  for (std::size_t i = 0; i < x.vertices.size(); ++i) index.emplace(x.vertices[i], i);
  for (const auto& u : x.vertices) x.phi.push_back(phi(p, u));

  auto neighbour = [&](std::size_t i, std::size_t wall) -> std::optional<std::size_t> {
    auto it = index.find(flipped(x.vertices[i], wall));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  std::set<std::array<std::size_t, 4>> seen_squares;
  for (std::size_t i = 0; i < x.vertices.size(); ++i) {
    for (std::size_t w = 0; w < p.wall_count(); ++w) {
      auto j = neighbour(i, w);
      if (j && i < *j) x.edges.push_back({i, *j, w});
    }
    for (std::size_t w1 = 0; w1 < p.wall_count(); ++w1) {
      auto j1 = neighbour(i, w1);
      if (!j1) continue;
      for (std::size_t w2 = w1 + 1; w2 < p.wall_count(); ++w2) {
        auto j2 = neighbour(i, w2);
        if (!j2) continue;
        auto opposite = neighbour(*j1, w2);
        if (!opposite) continue;
        std::array<std::size_t, 4> key{i, *j1, *opposite, *j2};
        std::sort(key.begin(), key.end());
        if (seen_squares.insert(key).second) {
          x.squares.push_back({{i, *j1, *opposite, *j2}, {w1, w2}});
        }
      }
    }
  }
  if (auto bad = duality_violations(p, x); !bad.empty()) {
    throw InvariantError("dual cube complex: " + bad.front());
  }
  return x;
}

std::vector<std::string> duality_violations(const Pocset& p, const CubeComplex& x) {
  std::vector<std::string> out;
  const SimplicialGraph& g = p.graph();
  VertexSet covered;
  for (std::size_t i = 0; i < x.vertices.size(); ++i) {
    if (!is_ultrafilter(p, x.vertices[i])) out.push_back("vertex is not an ultrafilter");
    if (x.phi[i].empty()) out.push_back("empty Phi at complex vertex " + std::to_string(i));
    covered |= x.phi[i];
  }
  if (covered != g.vertices()) out.push_back("Phi sets do not cover the graph");

  const auto adj = x.adjacency();
  const auto dist = all_pairs_bfs(adj);
  for (std::size_t i = 0; i < x.vertices.size(); ++i) {
    if (dist[0][i] < 0) {
      out.push_back("1-skeleton is disconnected");
      break;
    }
  }
  if (x.vertices.size() <= kMedianCheckLimit && !is_median_graph(adj)) {
    out.push_back("1-skeleton is not a median graph");
  }

  for (const auto& e : x.edges) {
    const std::size_t a = x.vertices[e.from].chosen(e.wall);
    auto mins = minimal_elements(p, x.vertices[e.from]);
    if (std::find(mins.begin(), mins.end(), a) == mins.end()) {
      out.push_back("edge flips a non-minimal halfspace " + describe(p, a));
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> crossing;
  for (const auto& s : x.squares) {
    crossing.emplace(s.walls[0], s.walls[1]);
    const std::size_t a = halfspace_id(s.walls[0], Side::low);
    const std::size_t b = halfspace_id(s.walls[1], Side::low);
    if (!p.bases_adjacent(a, b)) {
      out.push_back("square between walls with non-adjacent bases " + describe(p, a) + " " +
                    describe(p, b));
    }
  }
  for (std::size_t w1 = 0; w1 < p.wall_count(); ++w1) {
    for (std::size_t w2 = w1 + 1; w2 < p.wall_count(); ++w2) {
      const std::size_t a = halfspace_id(w1, Side::low);
      const std::size_t b = halfspace_id(w2, Side::low);
      if (crossing.count({w1, w2}) != static_cast<std::size_t>(p.bases_adjacent(a, b))) {
        out.push_back("walls " + describe(p, a) + " and " + describe(p, b) +
                      " cross iff bases adjacent fails");
      }
    }
  }
  // Locally: two flippable walls with adjacent bases span a square.
  std::set<Ultrafilter> vertex_set(x.vertices.begin(), x.vertices.end());
  for (const auto& u : x.vertices) {
    auto mins = minimal_elements(p, u);
    for (std::size_t i = 0; i < mins.size(); ++i) {
      for (std::size_t j = i + 1; j < mins.size(); ++j) {
        if (!p.bases_adjacent(mins[i], mins[j])) continue;
        if (!vertex_set.count(flipped(flipped(u, wall_of(mins[i])), wall_of(mins[j])))) {
          out.push_back("adjacent-based flips do not commute");
        }
      }
    }
  }
  return out;
}

PrimeGraphResult prime_graph(const SimplicialGraph& g, const PartitionPolicy& policy) {
  PrimeGraphResult r;
  r.pocset = build_pocset(g, policy);
  r.complex = dual_complex(r.pocset);
  r.phi_table = r.complex.phi;
  r.index = r.complex.vertices.size();
  r.prime_graph = induced_subgraph(g, r.phi_table.front());
  for (auto s : r.phi_table) {
    if (!graph_isomorphic(induced_subgraph(g, s), r.prime_graph)) {
      throw InvariantError("Phi sets span non-isomorphic graphs");
    }
  }
  if (!is_type_II(r.prime_graph)) throw InvariantError("prime graph is not of type II");
  if (!is_prime_raag(r.prime_graph)) throw InvariantError("prime graph is not prime");
  return r;
}

}  // namespace raagqi
