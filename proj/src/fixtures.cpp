#include "raagqi/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace raagqi {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::paper: return "PAPER";
    case Provenance::trivial: return "TRIVIAL";
    case Provenance::derived: return "DERIVED";
  }
  return "DERIVED";
}

const ExpectedValue& Fixture::expect(std::string_view key) const {
  for (const auto& e : expected) {
    if (e.key == key) return e;
  }
  throw std::out_of_range("fixture " + name + " has no expected value '" + std::string(key) + "'");
}

bool Fixture::has(std::string_view key) const {
  return std::any_of(expected.begin(), expected.end(),
                     [&](const ExpectedValue& e) { return e.key == key; });
}

SimplicialGraph cycle(std::size_t n, const std::string& prefix) {
  std::vector<LabelEdge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    edges.emplace_back(prefix + std::to_string(i), prefix + std::to_string(i % n + 1));
  }
  return SimplicialGraph::from_edges(edges);
}

SimplicialGraph complete_graph(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<LabelEdge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back(prefix + std::to_string(i));
    for (std::size_t j = 1; j < i; ++j) {
      edges.emplace_back(prefix + std::to_string(j), prefix + std::to_string(i));
    }
  }
  return SimplicialGraph::from_labels(labels, edges);
}

SimplicialGraph path(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<LabelEdge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back(prefix + std::to_string(i));
    if (i > 1) edges.emplace_back(prefix + std::to_string(i - 1), prefix + std::to_string(i));
  }
  return SimplicialGraph::from_labels(labels, edges);
}

namespace {

SimplicialGraph glue(const SimplicialGraph& base, const SimplicialGraph& piece,
                     const std::map<std::string, std::string>& identify) {
  std::map<std::string, std::string> rename;
  for (const auto& l : piece.labels()) {
    auto it = identify.find(l);
    if (it != identify.end()) {
      base.index_of(it->second);
      rename[l] = it->second;
    } else {
      if (base.find(l)) throw GraphError("glued piece reuses base label " + l);
      rename[l] = l;
    }
  }
  for (const auto& [from, to] : identify) {
    piece.index_of(from);
    for (const auto& [from2, to2] : identify) {
      if (from >= from2) continue;
      if (piece.adjacent(piece.index_of(from), piece.index_of(from2)) !=
          base.adjacent(base.index_of(to), base.index_of(to2))) {
        throw GraphError("identification does not preserve adjacency between " + from + " and " +
                         from2);
      }
    }
  }
  return graph_union(base, relabel(piece, rename));
}

std::vector<std::string> keys_of(const std::map<std::string, std::string>& m) {
  std::vector<std::string> out;
  for (const auto& kv : m) out.push_back(kv.first);
  return out;
}

std::vector<std::string> values_of(const std::map<std::string, std::string>& m) {
  std::vector<std::string> out;
  for (const auto& kv : m) out.push_back(kv.second);
  return out;
}

bool is_closed_star(const SimplicialGraph& g, VertexSet s) {
  for (Vertex v : s) {
    if (star(g, v) == s) return true;
  }
  return false;
}

}  // namespace

SimplicialGraph glue_along_closed_star(const SimplicialGraph& base, const SimplicialGraph& piece,
                                       const std::map<std::string, std::string>& identify) {
  if (!is_closed_star(piece, piece.set_of(keys_of(identify))) ||
      !is_closed_star(base, base.set_of(values_of(identify)))) {
    throw GraphError("identified vertices do not form a closed star on both sides");
  }
  return glue(base, piece, identify);
}

SimplicialGraph glue_along_edge(const SimplicialGraph& base, const SimplicialGraph& piece,
                                const std::map<std::string, std::string>& identify) {
  const VertexSet a = piece.set_of(keys_of(identify));
  const VertexSet b = base.set_of(values_of(identify));
  if (a.size() != 2 || !is_clique(piece, a) || b.size() != 2 || !is_clique(base, b)) {
    throw GraphError("identified vertices do not form an edge on both sides");
  }
  return glue(base, piece, identify);
}

namespace {

using nlohmann::json;

ExpectedValue paper(std::string key, json value, std::string note = {}) {
  return {std::move(key), std::move(value), Provenance::paper, std::move(note)};
}
ExpectedValue trivial(std::string key, json value, std::string note = {}) {
  return {std::move(key), std::move(value), Provenance::trivial, std::move(note)};
}
ExpectedValue derived(std::string key, json value, std::string note = {}) {
  return {std::move(key), std::move(value), Provenance::derived, std::move(note)};
}

SimplicialGraph pentagon_with_hexagons(std::size_t count) {
  SimplicialGraph g = cycle(5, "p");
  const std::string prefixes = "hk";
  for (std::size_t i = 0; i < count; ++i) {
    const std::string pre(1, prefixes[i]);
    g = glue_along_closed_star(g, cycle(6, pre),
                               {{pre + "1", "p1"}, {pre + "2", "p2"}, {pre + "6", "p5"}});
  }
  return g;
}

SimplicialGraph hexagons(std::size_t count) {
  SimplicialGraph g = cycle(6, "a");
  const std::string prefixes = "bc";
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const std::string pre(1, prefixes[i]);
    g = glue_along_closed_star(g, cycle(6, pre),
                               {{pre + "1", "a1"}, {pre + "2", "a2"}, {pre + "6", "a6"}});
  }
  return g;
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;

  out.push_back({"c5", "5-cycle on 1..5", cycle(5, ""),
                 {derived("connected", true),
                  derived("separating_stars", json::array()),
                  derived("weak_type_II", true, "each link intersection is one vertex"),
                  derived("type_II", true),
                  derived("weak_type_I", true, "both formulations agree"),
                  derived("star_cover_pairs", json::array(), "St(1) and St(3) miss edge 4-5"),
                  trivial("link_1", {"2", "5"}),
                  trivial("star_1", {"1", "2", "5"}),
                  derived("irreducible_factor_count", 1),
                  derived("clique_factor_size", 0),
                  derived("transvection_count", 0),
                  derived("partial_conjugation_count", 0),
                  derived("graph_automorphism_count", 10, "dihedral group of order 10"),
                  derived("out_finite", true),
                  derived("prime", true),
                  derived("prime_index", 1),
                  derived("prime_graph_like", "c5")}});

  out.push_back({"p3", "path a-b-c", SimplicialGraph::from_edges({{"a", "b"}, {"b", "c"}}),
                 {derived("transvection_count", 4),
                  derived("non_adjacent_transvections",
                          json::array({json::array({"a", "c"}), json::array({"c", "a"})})),
                  derived("out_finite", false),
                  derived("separating_stars", json::array()),
                  trivial("maximal_cliques",
                          json::array({json::array({"a", "b"}), json::array({"b", "c"})}))}});

  out.push_back({"k3", "triangle a, b, c",
                 SimplicialGraph::from_edges({{"a", "b"}, {"a", "c"}, {"b", "c"}}),
                 {trivial("weak_type_II", true, "no pair at distance 2"),
                  derived("type_II", true),
                  trivial("transvection_count", 6, "every star is the whole graph"),
                  trivial("all_transvections_adjacent", true),
                  trivial("clique_factor_size", 3),
                  trivial("irreducible_factor_count", 0),
                  trivial("tuple_a", json::array()),
                  derived("prime_index", 1)}});

  out.push_back({"c4", "4-cycle on 1..4", cycle(4, ""),
                 {derived("weak_type_II", false, "lk(1) & lk(3) = {2, 4} separates"),
                  derived("type_II", false),
                  derived("weak_type_I", false),
                  derived("irreducible_factor_count", 2, "complement is two disjoint edges"),
                  derived("clique_factor_size", 0)}});

  out.push_back({"k2", "single edge a-b", SimplicialGraph::from_edges({{"a", "b"}}),
                 {trivial("ball_size_1", 5), derived("ball_size_2", 13), derived("ball_size_3", 25),
                  trivial("identity_domain_classes", 2)}});

  out.push_back({"f2", "two isolated vertices a, b", SimplicialGraph::from_labels({"a", "b"}, {}),
                 {derived("ball_size_1", 5), derived("ball_size_2", 17, "1 + 4 + 12"),
                  derived("edge_domain_classes", 3),
                  paper("edge_special_subgroup_order", 3, "free group of rank 3"),
                  paper("edge_special_subgroup_edges", 0, "free group of rank 3"),
                  trivial("edge_special_subgroup_index", 2)}});

  out.push_back({"k13", "star with center c and leaves l1, l2, l3",
                 SimplicialGraph::from_edges({{"c", "l1"}, {"c", "l2"}, {"c", "l3"}}),
                 {derived("partial_conjugation_count", 6, "two records per leaf")}});

  out.push_back({"c6", "6-cycle on a1..a6", cycle(6, "a"),
                 {derived("weak_type_I", true),
                  derived("type_II", true),
                  derived("prime", true),
                  derived("prime_index", 1),
                  derived("edge_domain_classes", 9),
                  derived("edge_special_subgroup_like", "hex2"),
                  derived("segment_special_subgroup_like", "hex3")}});

  out.push_back({"c5k3", "5-cycle and triangle glued along the edge p1-p2",
                 glue_along_edge(cycle(5, "p"), complete_graph(3, "t"),
                                 {{"t1", "p1"}, {"t2", "p2"}}),
                 {paper("weak_type_I", true, "5-cycle and 3-cycle glued along an edge"),
                  derived("minimal_stable_t3", {"p1", "p2", "t3"})}});

  out.push_back({"ex819a", "pentagon and hexagon glued along the closed star of p1",
                 pentagon_with_hexagons(1),
                 {trivial("glue_vertex", "p1"),
                  paper("type_II", true, "model type II example"),
                  derived("weak_type_I", false),
                  derived("branch_data_p1",
                          {{{"component", {"h3", "h4", "h5"}}, {"boundary", {"p2", "p5"}}},
                           {{"component", {"p3", "p4"}}, {"boundary", {"p2", "p5"}}}}),
                  paper("glue_qii", false, "the two branches are not QII"),
                  paper("tuple_p1", {1, 1}),
                  paper("prime", true),
                  paper("wall_count", 0),
                  trivial("ultrafilter_count", 1),
                  paper("prime_index", 1),
                  paper("prime_graph_like", "ex819a")}});

  out.push_back({"ex819b", "pentagon and two hexagons glued along the closed star of p1",
                 pentagon_with_hexagons(2),
                 {trivial("glue_vertex", "p1"),
                  derived("type_II", true),
                  paper("tuple_p1", {1, 2}),
                  paper("prime", true),
                  derived("wall_count", 0),
                  derived("prime_index", 1),
                  paper("qi_ex819a", "no", "not quasi-isometric")}});

  out.push_back({"hex2", "two hexagons glued along the closed star of a1", hexagons(2),
                 {trivial("glue_vertex", "a1"),
                  derived("components_minus_glue_star", {{"a3", "a4", "a5"}, {"b3", "b4", "b5"}}),
                  derived("separating_stars", {"a1"}),
                  derived("weak_type_II", true),
                  derived("type_II", true),
                  derived("weak_type_I", false, "St(a1) separates"),
                  derived("glue_qii", true, "swap fixing both boundary vertices"),
                  derived("tuple_a1", {2}),
                  derived("d_a1", 2),
                  derived("prime", false),
                  derived("partial_conjugation_count_a1", 2),
                  derived("out_finite", false),
                  derived("wall_count", 1),
                  derived("ultrafilter_count", 2),
                  derived("prime_graph_like", "c6"),
                  derived("prime_index", 2),
                  derived("qi_c6", "yes")}});

  out.push_back({"hex3", "three hexagons glued along the closed star of a1", hexagons(3),
                 {trivial("glue_vertex", "a1"),
                  derived("type_II", true),
                  derived("tuple_a1", {3}),
                  derived("d_a1", 3),
                  derived("wall_count", 2),
                  derived("ultrafilter_count", 3, "nested walls forbid the crossed choice"),
                  derived("prime_graph_like", "c6"),
                  derived("prime_index", 3)}});

  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> registry = build();
  return registry;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown fixture " + std::string(name));
}

}  // namespace raagqi
