#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

namespace oracle {

using raagqi::Side;
using raagqi::VertexSet;

Matrix adjacency_matrix(const SimplicialGraph& g) {
  const auto n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) m[a][b] = g.adjacent(a, b);
  }
  return m;
}

std::vector<Vertex> link(const SimplicialGraph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, v)) out.push_back(u);
  }
  return out;
}

std::vector<Vertex> star(const SimplicialGraph& g, Vertex v) {
  auto out = oracle::link(g, v);
  out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> components(const SimplicialGraph& g,
                                            const std::vector<bool>& removed) {
  const auto m = adjacency_matrix(g);
  const auto n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = static_cast<int>(out.size());
    std::vector<Vertex> members;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (Vertex w = 0; w < n; ++w) {
        if (m[u][w] && !removed[w] && comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

std::vector<std::vector<int>> distances(const SimplicialGraph& g) {
  const auto n = g.order();
  const auto m = adjacency_matrix(g);
  // Floyd-Warshall.
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (Vertex a = 0; a < n; ++a) {
    d[a][a] = 0;
    for (Vertex b = 0; b < n; ++b) {
      if (m[a][b]) d[a][b] = 1;
    }
  }
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][k] + d[k][b]);
    }
  }
  for (auto& row : d) {
    for (auto& x : row) {
      if (x == inf) x = -1;
    }
  }
  return d;
}

bool connected(const SimplicialGraph& g) {
  return g.order() > 0 && components(g, std::vector<bool>(g.order(), false)).size() == 1;
}

bool separating_star(const SimplicialGraph& g, Vertex v) {
  std::vector<bool> removed(g.order(), false);
  for (auto u : oracle::star(g, v)) removed[u] = true;
  return components(g, removed).size() >= 2;
}

bool link_pair_separates(const SimplicialGraph& g, Vertex v, Vertex w) {
  std::vector<bool> removed(g.order(), false);
  for (Vertex u = 0; u < g.order(); ++u) removed[u] = g.adjacent(u, v) && g.adjacent(u, w);
  return components(g, removed).size() >= 2;
}

bool weak_type_II(const SimplicialGraph& g) {
  if (!connected(g)) return false;
  const auto d = distances(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = 0; w < g.order(); ++w) {
      if (d[v][w] == 2 && link_pair_separates(g, v, w)) return false;
    }
  }
  return true;
}

bool type_II(const SimplicialGraph& g) {
  if (!connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = 0; w < g.order(); ++w) {
      if (v != w && link_pair_separates(g, v, w)) return false;
    }
  }
  return true;
}

bool weak_type_I(const SimplicialGraph& g) {
  if (!connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (separating_star(g, v)) return false;
  }
  const auto d = distances(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = 0; w < g.order(); ++w) {
      if (d[v][w] != 2) continue;
      auto sv = oracle::star(g, v);
      auto sw = oracle::star(g, w);
      auto in = [](const std::vector<Vertex>& s, Vertex x) {
        return std::find(s.begin(), s.end(), x) != s.end();
      };
      bool covers = true;
      for (Vertex x = 0; x < g.order() && covers; ++x) covers = in(sv, x) || in(sw, x);
      for (auto [a, b] : g.edges()) {
        if (!covers) break;
        covers = (in(sv, a) && in(sv, b)) || (in(sw, a) && in(sw, b));
      }
      if (covers) return false;
    }
  }
  return true;
}

namespace {

bool extend(const Matrix& ma, const Matrix& mb, std::vector<int>& map, std::vector<bool>& used,
            std::size_t i) {
  const auto n = ma.size();
  if (i == n) return true;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k) ok = ma[i][k] == mb[j][map[k]];
    if (!ok) continue;
    used[j] = true;
    map[i] = static_cast<int>(j);
    if (extend(ma, mb, map, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const SimplicialGraph& a, const SimplicialGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> map(a.order(), -1);
  std::vector<bool> used(a.order(), false);
  return extend(adjacency_matrix(a), adjacency_matrix(b), map, used, 0);
}

std::uint64_t automorphisms(const SimplicialGraph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (auto [a, b] : g.edges()) {
      if (!g.adjacent(perm[a], perm[b])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<std::pair<Vertex, Vertex>> transvection_pairs(const SimplicialGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex w = 0; w < g.order(); ++w) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v == w) continue;
      bool inside = true;
      for (Vertex u = 0; u < g.order(); ++u) {
        if (g.adjacent(u, w) && !(u == v || g.adjacent(u, v))) inside = false;
      }
      if (inside) out.emplace_back(w, v);
    }
  }
  return out;
}

std::size_t partial_conjugation_count(const SimplicialGraph& g) {
  std::size_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<bool> removed(g.order(), false);
    for (auto u : oracle::star(g, v)) removed[u] = true;
    auto c = components(g, removed).size();
    if (c >= 2) total += c;
  }
  return total;
}

std::vector<std::vector<Side>> ultrafilters(const raagqi::Pocset& p) {
  const auto d = distances(p.graph());
  const std::size_t walls = p.wall_count();
  auto extent = [&](std::size_t id) { return p.halfspace(id).extent; };
  auto base = [&](std::size_t id) { return p.halfspace(id).base; };
  // a and b can both be chosen unless their bases are not adjacent and a
  // lies inside the complement of b.
  auto clash = [&](std::size_t a, std::size_t b) {
    return d[base(a)][base(b)] != 1 && extent(a).is_subset_of(extent(b ^ 1U));
  };
  std::vector<std::vector<Side>> out;
  std::vector<Side> current;
  std::function<void()> go = [&] {
    const std::size_t w = current.size();
    if (w == walls) {
      out.push_back(current);
      return;
    }
    for (Side s : {Side::low, Side::high}) {
      const std::size_t a = 2 * w + static_cast<std::size_t>(s);
      bool ok = true;
      for (std::size_t v = 0; v < w && ok; ++v) {
        const std::size_t b = 2 * v + static_cast<std::size_t>(current[v]);
        ok = !clash(a, b) && !clash(b, a);
      }
      if (!ok) continue;
      current.push_back(s);
      go();
      current.pop_back();
    }
  };
  go();
  return out;
}

namespace {

std::set<Word> closure(const SimplicialGraph& g, const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word u = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      const Letter a = u[i];
      const Letter b = u[i + 1];
      Word next;
      if (a.vertex != b.vertex && g.adjacent(a.vertex, b.vertex)) {
        next = u;
        std::swap(next[i], next[i + 1]);
      } else if (a.vertex == b.vertex && a.inverse != b.inverse) {
        next = u;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i),
                   next.begin() + static_cast<std::ptrdiff_t>(i + 2));
      } else {
        continue;
      }
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

Word least(const std::set<Word>& words) {
  const Word* best = nullptr;
  for (const auto& w : words) {
    if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best)) best = &w;
  }
  return *best;
}

}  // namespace

Word canonical(const SimplicialGraph& g, const Word& w) { return least(closure(g, w)); }

CanonicalTable::CanonicalTable(const SimplicialGraph& g, std::size_t max_length)
    : g_(g), base_(2 * g.order() + 1) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < max_length; ++i) size *= base_;
  table_.assign(size, kUnset);
}

std::uint64_t CanonicalTable::encode(const Word& w) const {
  std::uint64_t code = 0;
  std::uint64_t scale = 1;
  for (auto l : w) {
    code += scale * (1 + 2 * l.vertex + (l.inverse ? 1 : 0));
    scale *= base_;
  }
  return code;
}

Word CanonicalTable::decode(std::uint64_t code) const {
  Word w;
  while (code > 0) {
    const auto digit = code % base_ - 1;
    w.push_back({static_cast<Vertex>(digit / 2), digit % 2 == 1});
    code /= base_;
  }
  return w;
}

Word CanonicalTable::get(const Word& w) {
  const auto code = encode(w);
  if (table_.at(code) != kUnset) return decode(table_[code]);
  const auto words = closure(g_, w);
  const Word best = least(words);
  const auto best_code = encode(best);
  for (const auto& u : words) table_[encode(u)] = best_code;
  return best;
}

std::vector<std::size_t> growth(const SimplicialGraph& g, std::size_t radius) {
  std::set<Word> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  std::vector<std::size_t> spheres{1};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (Vertex v = 0; v < g.order(); ++v) {
        for (bool inv : {false, true}) {
          Word u = w;
          u.push_back({v, inv});
          u = canonical(g, u);
          if (seen.insert(u).second) next.push_back(u);
        }
      }
    }
    spheres.push_back(next.size());
    frontier = std::move(next);
  }
  return spheres;
}

namespace {

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word inverse_of(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->vertex, !it->inverse});
  return out;
}

std::vector<Word> ball_words(const SimplicialGraph& g, std::size_t radius) {
  std::set<Word> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (Vertex v = 0; v < g.order(); ++v) {
        for (bool inv : {false, true}) {
          Word u = canonical(g, concat(w, {{v, inv}}));
          if (seen.insert(u).second) next.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

bool convex(const SimplicialGraph& g, const std::vector<Word>& set) {
  std::set<Word> members;
  for (const auto& w : set) members.insert(canonical(g, w));
  for (const auto& u : members) {
    for (const auto& w : members) {
      const Word z = canonical(g, concat(inverse_of(u), w));
      for (const auto& p : ball_words(g, z.size())) {
        const Word rest = canonical(g, concat(inverse_of(p), z));
        if (p.size() + rest.size() != z.size()) continue;
        if (!members.count(canonical(g, concat(u, p)))) return false;
      }
    }
  }
  return true;
}

bool in_double_coset(const SimplicialGraph& g, const Word& z, VertexSet s1, VertexSet s2) {
  const Word cz = canonical(g, z);
  for (const auto& h : ball_words(g, cz.size())) {
    bool inside = true;
    for (auto l : h) inside = inside && s1.contains(l.vertex);
    if (!inside) continue;
    const Word rest = canonical(g, concat(inverse_of(h), cz));
    bool in_s2 = true;
    for (auto l : rest) in_s2 = in_s2 && s2.contains(l.vertex);
    if (in_s2) return true;
  }
  return false;
}

std::vector<Word> all_words(const SimplicialGraph& g, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (Vertex v = 0; v < g.order(); ++v) {
        for (bool inv : {false, true}) next.push_back(concat(w, {{v, inv}}));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
