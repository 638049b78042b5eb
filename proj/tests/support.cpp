#include "support.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "raagqi/classify.hpp"
#include "raagqi/cubulation.hpp"
#include "raagqi/graph_io.hpp"
#include "raagqi/isomorphism.hpp"
#include "raagqi/out_gens.hpp"
#include "raagqi/prime_partition.hpp"
#include "raagqi/qi_decide.hpp"

namespace support {

using nlohmann::json;
using namespace raagqi;

const SimplicialGraph& fx(const std::string& name) { return fixture(name).graph; }

SimplicialGraph random_relabel(const SimplicialGraph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(g.order());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<std::string, std::string> mapping;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    mapping[g.label(static_cast<Vertex>(i))] = "r" + std::to_string(100 + perm[i]);
  }
  return relabel(g, mapping);
}

SimplicialGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::string> labels;
  std::vector<LabelEdge> edges;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(labels[i], labels[j]);
    }
  }
  return SimplicialGraph::from_labels(labels, edges);
}

SimplicialGraph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  while (true) {
    auto g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

std::vector<Word> edge_domain(const SimplicialGraph&) { return {{}, {{0, false}}}; }

std::vector<Word> segment_domain(const SimplicialGraph&) {
  return {{}, {{0, false}}, {{0, false}, {0, false}}};
}

namespace {

json labels(const SimplicialGraph& g, VertexSet s) { return g.labels_of(s); }

Vertex vertex_after(const SimplicialGraph& g, const std::string& key, const std::string& prefix) {
  return g.index_of(key.substr(prefix.size()));
}

bool starts(const std::string& key, const std::string& prefix) { return key.rfind(prefix, 0) == 0; }

json like(const SimplicialGraph& g, const json& expected) {
  // The expected value names a fixture; report it back when isomorphic.
  const std::string name = expected.get<std::string>();
  return graph_isomorphic(g, fixture(name).graph) ? json(name) : json("not isomorphic to " + name);
}

Vertex glue(const Fixture& f) { return f.graph.index_of(f.expect("glue_vertex").value.get<std::string>()); }

}  // namespace

json evaluate(const Fixture& f, const std::string& key) {
  const SimplicialGraph& g = f.graph;
  const json& expected = f.expect(key).value;
  if (key == "connected") return is_connected(g);
  if (key == "separating_stars") return labels(g, separating_stars(g));
  if (key == "weak_type_II") return is_weak_type_II(g);
  if (key == "type_II") return is_type_II(g);
  if (key == "weak_type_I") return is_weak_type_I(g);
  if (key == "star_cover_pairs") {
    json out = json::array();
    for (auto [a, b] : star_cover_pairs(g)) out.push_back(json::array({g.label(a), g.label(b)}));
    return out;
  }
  if (starts(key, "link_")) return labels(g, link(g, vertex_after(g, key, "link_")));
  if (starts(key, "star_") && key != "star_cover_pairs") {
    return labels(g, star(g, vertex_after(g, key, "star_")));
  }
  if (key == "irreducible_factor_count") return join_decomposition(g).irreducible_factors.size();
  if (key == "clique_factor_size") return join_decomposition(g).clique_factor.size();
  if (key == "maximal_cliques") {
    json out = json::array();
    for (auto c : maximal_cliques(g)) out.push_back(labels(g, c));
    return out;
  }
  if (key == "transvection_count") return transvections(g).size();
  if (key == "non_adjacent_transvections") {
    json out = json::array();
    for (const auto& t : transvections(g)) {
      if (!t.adjacent) out.push_back(json::array({g.label(t.dominated), g.label(t.dominating)}));
    }
    return out;
  }
  if (key == "all_transvections_adjacent") {
    auto t = transvections(g);
    return std::all_of(t.begin(), t.end(), [](const auto& r) { return r.adjacent; });
  }
  if (key == "partial_conjugation_count") return partial_conjugations(g).size();
  if (starts(key, "partial_conjugation_count_")) {
    const Vertex v = vertex_after(g, key, "partial_conjugation_count_");
    std::size_t n = 0;
    for (const auto& p : partial_conjugations(g)) n += p.pivot == v ? 1 : 0;
    return n;
  }
  if (key == "graph_automorphism_count") return automorphism_count(g);
  if (key == "out_finite") return out_is_finite(g);
  if (key == "prime") return is_prime_raag(g);
  if (key == "prime_index") return prime_graph(g).index;
  if (key == "prime_graph_like") return like(prime_graph(g).prime_graph, expected);
  if (key == "wall_count") return build_pocset(g).wall_count();
  if (key == "ultrafilter_count") return ultrafilters(build_pocset(g)).size();
  if (starts(key, "tuple_")) return prime_partition(g, vertex_after(g, key, "tuple_")).tuple;
  if (starts(key, "d_")) return prime_partition(g, vertex_after(g, key, "d_")).d;
  if (starts(key, "branch_data_")) {
    json out = json::array();
    for (const auto& b : branch_data(g, vertex_after(g, key, "branch_data_"))) {
      out.push_back({{"component", labels(g, b.component)}, {"boundary", labels(g, b.boundary)}});
    }
    return out;
  }
  if (key == "glue_vertex") return g.label(glue(f));
  if (key == "glue_qii") {
    const Vertex v = glue(f);
    const auto data = branch_data(g, v);
    return qii_equivalent(g, v, data.at(0), data.at(1));
  }
  if (key == "components_minus_glue_star") {
    json out = json::array();
    for (auto c : components_minus(g, star(g, glue(f)))) out.push_back(labels(g, c));
    return out;
  }
  if (starts(key, "ball_size_")) return ball(g, std::stoul(key.substr(10))).elements.size();
  if (key == "identity_domain_classes") return geodesic_classes(g, {Word{}}).size();
  if (key == "edge_domain_classes") return geodesic_classes(g, edge_domain(g)).size();
  if (key == "edge_special_subgroup_order") {
    return special_subgroup(g, edge_domain(g)).defining_graph.order();
  }
  if (key == "edge_special_subgroup_edges") {
    return special_subgroup(g, edge_domain(g)).defining_graph.edge_count();
  }
  if (key == "edge_special_subgroup_index") return special_subgroup(g, edge_domain(g)).index;
  if (key == "edge_special_subgroup_like") {
    return like(special_subgroup(g, edge_domain(g)).defining_graph, expected);
  }
  if (key == "segment_special_subgroup_like") {
    return like(special_subgroup(g, segment_domain(g)).defining_graph, expected);
  }
  if (starts(key, "minimal_stable_")) {
    return labels(g, minimal_stable_subgraph(g, vertex_after(g, key, "minimal_stable_")));
  }
  if (starts(key, "qi_")) {
    return std::string(to_string(qi_equivalent(g, fixture(key.substr(3)).graph).verdict));
  }
  throw std::out_of_range("no evaluator for expectation key " + key);
}

std::string ExpectationResult::line() const {
  return std::string(ok ? "ok   " : "FAIL ") + fixture + "." + key + " = " + actual.dump() + " [" +
         provenance + "]" + (ok ? "" : " expected " + expected.dump());
}

std::vector<ExpectationResult> check_all_expectations() {
  std::vector<ExpectationResult> out;
  for (const auto& f : fixtures()) {
    for (const auto& e : f.expected) {
      ExpectationResult r{f.name, e.key, std::string(to_string(e.provenance)), e.value, nullptr,
                          false};
      try {
        r.actual = evaluate(f, e.key);
        r.ok = r.actual == e.value;
      } catch (const std::exception& ex) {
        r.actual = std::string("threw: ") + ex.what();
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<const Fixture*> type_II_fixtures() {
  std::vector<const Fixture*> out;
  for (const auto& f : fixtures()) {
    if (is_type_II(f.graph)) out.push_back(&f);
  }
  return out;
}

}  // namespace support
