#include "raagqi/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace raagqi {
namespace {

// Joint colour refinement (1-dimensional Weisfeiler-Leman) on both graphs so
// that colour ids are comparable across them.
void refine(const SimplicialGraph& a, const SimplicialGraph& b, std::vector<std::uint32_t>& ca,
            std::vector<std::uint32_t>& cb) {
  using Signature = std::pair<std::uint32_t, std::vector<std::uint32_t>>;
  auto signature = [](const SimplicialGraph& g, const std::vector<std::uint32_t>& c, Vertex v) {
    Signature s{c[v], {}};
    for (Vertex w : g.neighbors(v)) s.second.push_back(c[w]);
    std::sort(s.second.begin(), s.second.end());
    return s;
  };
  std::size_t classes = 0;
  for (;;) {
    std::map<Signature, std::uint32_t> ids;
    std::vector<Signature> sa, sb;
    for (Vertex v = 0; v < a.order(); ++v) sa.push_back(signature(a, ca, v));
    for (Vertex v = 0; v < b.order(); ++v) sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    std::uint32_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (Vertex v = 0; v < a.order(); ++v) ca[v] = ids[sa[v]];
    for (Vertex v = 0; v < b.order(); ++v) cb[v] = ids[sb[v]];
    if (ids.size() == classes) return;
    classes = ids.size();
  }
}

class Matcher {
 public:
  Matcher(const SimplicialGraph& a, const SimplicialGraph& b, std::vector<std::uint32_t> ca,
          std::vector<std::uint32_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {}

  std::optional<VertexMap> run() {
    const std::size_t n = a_.order();
    if (n != b_.order() || a_.edge_count() != b_.edge_count()) return std::nullopt;
    refine(a_, b_, ca_, cb_);
    auto hist_a = ca_;
    auto hist_b = cb_;
    std::sort(hist_a.begin(), hist_a.end());
    std::sort(hist_b.begin(), hist_b.end());
    if (hist_a != hist_b) return std::nullopt;

    class_size_.assign(n + 1, 0);
    for (auto c : ca_) {
      if (c >= class_size_.size()) class_size_.resize(c + 1, 0);
      ++class_size_[c];
    }
    build_order();
    map_.assign(n, 0);
    used_ = VertexSet{};
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  // Each next vertex maximises the number of already-ordered neighbours, then
  // prefers small colour classes, then the least index.
  void build_order() {
    const std::size_t n = a_.order();
    order_.clear();
    VertexSet placed;
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = 0;
      bool have = false;
      std::tuple<std::size_t, std::size_t, Vertex> best_key{};
      for (Vertex v = 0; v < n; ++v) {
        if (placed.contains(v)) continue;
        std::size_t links = (a_.neighbors(v) & placed).size();
        auto key = std::make_tuple(n - links, class_size_[ca_[v]], v);
        if (!have || key < best_key) {
          best_key = key;
          best = v;
          have = true;
        }
      }
      order_.push_back(best);
      placed.insert(best);
    }
  }

  bool consistent(Vertex v, Vertex w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex u = order_[i];
      if (a_.adjacent(v, u) != b_.adjacent(w, map_[u])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if (used_.contains(w) || cb_[w] != ca_[v]) continue;
      if (!consistent(v, w, depth)) continue;
      map_[v] = w;
      used_.insert(w);
      if (extend(depth + 1)) return true;
      used_.erase(w);
    }
    return false;
  }

  const SimplicialGraph& a_;
  const SimplicialGraph& b_;
  std::vector<std::uint32_t> ca_;
  std::vector<std::uint32_t> cb_;
  std::vector<std::size_t> class_size_;
  std::vector<Vertex> order_;
  VertexMap map_;
  VertexSet used_;
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b,
                                          const std::vector<std::uint32_t>& colours_a,
                                          const std::vector<std::uint32_t>& colours_b) {
  if (colours_a.size() != a.order() || colours_b.size() != b.order()) {
    throw GraphError("colour vector size does not match graph order");
  }
  auto found = Matcher(a, b, colours_a, colours_b).run();
  if (found && !verify_isomorphism(a, b, *found)) {
    throw InvariantError("isomorphism search returned an invalid witness");
  }
  return found;
}

std::optional<VertexMap> find_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b) {
  return find_isomorphism(a, b, std::vector<std::uint32_t>(a.order(), 0),
                          std::vector<std::uint32_t>(b.order(), 0));
}

std::map<std::string, std::string> witness_labels(const SimplicialGraph& a,
                                                  const SimplicialGraph& b,
                                                  const VertexMap& map) {
  std::map<std::string, std::string> out;
  for (Vertex v = 0; v < a.order(); ++v) out.emplace(a.label(v), b.label(map.at(v)));
  return out;
}

bool verify_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b, const VertexMap& map) {
  if (a.order() != b.order() || map.size() != a.order()) return false;
  VertexSet image;
  for (Vertex w : map) {
    if (w >= b.order() || image.contains(w)) return false;
    image.insert(w);
  }
  for (Vertex u = 0; u < a.order(); ++u) {
    for (Vertex v = u + 1; v < a.order(); ++v) {
      if (a.adjacent(u, v) != b.adjacent(map[u], map[v])) return false;
    }
  }
  return true;
}

std::uint64_t automorphism_count(const SimplicialGraph& g) {
  const std::size_t n = g.order();
  // Colour 0 for free vertices, 1 + i for the i-th pinned vertex, and a
  // dedicated colour for the vertex whose orbit is being measured.
  std::vector<std::uint32_t> pinned(n, 0);
  const auto probe = static_cast<std::uint32_t>(n + 1);
  std::uint64_t total = 1;
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t orbit = 0;
    for (Vertex w = 0; w < n; ++w) {
      if (pinned[w] != 0) continue;
      auto ca = pinned;
      auto cb = pinned;
      ca[v] = probe;
      cb[w] = probe;
      if (find_isomorphism(g, g, ca, cb)) ++orbit;
    }
    total *= orbit;
    pinned[v] = v + 1;
  }
  return total;
}

}  // namespace raagqi
