#include "raagqi/report_json.hpp"

#include <sstream>

namespace raagqi {

json graph_json(const SimplicialGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.label_edges()) edges.push_back({a, b});
  return {{"vertices", g.labels()}, {"edges", edges}};
}

json labels_json(const SimplicialGraph& g, VertexSet s) { return g.labels_of(s); }

namespace {

json pair_json(const SimplicialGraph& g, VertexPair p) {
  return json::array({g.label(p.first), g.label(p.second)});
}

json optional_pair(const SimplicialGraph& g, const std::optional<VertexPair>& p) {
  return p ? pair_json(g, *p) : json(nullptr);
}

json word_json(const SimplicialGraph& g, const Word& w) { return format_word(g, w); }

}  // namespace

json to_json(const SimplicialGraph& g, const TypeReport& r) {
  json cover = json::array();
  for (auto p : r.star_cover_pairs) cover.push_back(pair_json(g, p));
  json weak_i_witness = nullptr;
  if (!r.weak_type_I) {
    if (!r.connected) {
      weak_i_witness = {{"disconnected", true}};
    } else if (!r.separating_star_vertices.empty()) {
      weak_i_witness = {{"separating_star", g.label(r.separating_star_vertices.front())}};
    } else if (r.weak_type_II_witness) {
      weak_i_witness = {{"separating_link_pair", pair_json(g, *r.weak_type_II_witness)}};
    } else if (!r.star_cover_pairs.empty()) {
      weak_i_witness = {{"star_cover_pair", pair_json(g, r.star_cover_pairs.front())}};
    }
  }
  return {{"connected", r.connected},
          {"separating_stars", labels_json(g, r.separating_star_vertices)},
          {"weak_type_II", r.weak_type_II},
          {"type_II", r.type_II},
          {"weak_type_I", r.weak_type_I},
          {"star_cover_pairs", cover},
          {"weak_type_II_witness", optional_pair(g, r.weak_type_II_witness)},
          {"type_II_witness", optional_pair(g, r.type_II_witness)},
          {"weak_type_I_witness", weak_i_witness}};
}

json explain(const SimplicialGraph& g, const TypeReport& r) {
  json lines = json::array();
  if (!r.connected) lines.push_back("the graph is empty or disconnected, so no type applies");
  for (Vertex v : r.separating_star_vertices) {
    lines.push_back("removing St(" + g.label(v) + ") disconnects the graph");
  }
  auto link_pair = [&](const VertexPair& p) {
    return "lk(" + g.label(p.first) + ") & lk(" + g.label(p.second) + ") separates the graph";
  };
  if (r.weak_type_II_witness) lines.push_back(link_pair(*r.weak_type_II_witness));
  if (r.type_II_witness && r.type_II_witness != r.weak_type_II_witness) {
    lines.push_back(link_pair(*r.type_II_witness));
  }
  for (auto p : r.star_cover_pairs) {
    lines.push_back("St(" + g.label(p.first) + ") and St(" + g.label(p.second) +
                    ") cover every vertex and edge");
  }
  if (r.type_II) lines.push_back("no link intersection separates: type II");
  if (r.weak_type_I) lines.push_back("weak type II without a separating star: weak type I");
  return lines;
}

json to_json(const SimplicialGraph& g, const OutReport& r) {
  json tv = json::array();
  for (const auto& t : r.transvections) {
    tv.push_back({{"dominated", g.label(t.dominated)},
                  {"dominating", g.label(t.dominating)},
                  {"adjacent", t.adjacent}});
  }
  json pc = json::array();
  for (const auto& p : r.partial_conjugations) {
    pc.push_back({{"pivot", g.label(p.pivot)}, {"component", labels_json(g, p.component)}});
  }
  return {{"inversion_count", r.inversion_count},
          {"graph_automorphism_count", r.graph_automorphism_count},
          {"transvections", tv},
          {"partial_conjugations", pc},
          {"out_finite", r.out_finite}};
}

json to_json(const SimplicialGraph& g, const PrimePartitionRecord& r) {
  auto datum = [&](const BranchDatum& b) {
    return json{{"component", labels_json(g, b.component)},
                {"boundary", labels_json(g, b.boundary)}};
  };
  json classes = json::array();
  for (const auto& c : r.classes) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back(datum(m));
    classes.push_back({{"members", members}, {"boundary", labels_json(g, c.shared_boundary)}});
  }
  json factors = json::array();
  for (const auto& f : r.factors) {
    json parts = json::array();
    for (const auto& m : f) parts.push_back(datum(m));
    factors.push_back(parts);
  }
  return {{"vertex", g.label(r.vertex)}, {"classes", classes}, {"tuple", r.tuple},
          {"d", r.d},                    {"prime", r.prime()}, {"factors", factors}};
}

json to_json(const Pocset& p) {
  const SimplicialGraph& g = p.graph();
  json halfspaces = json::array();
  for (std::size_t id = 0; id < p.size(); ++id) {
    const Halfspace& h = p.halfspace(id);
    halfspaces.push_back({{"id", id},
                          {"wall", wall_of(id)},
                          {"base", g.label(h.base)},
                          {"cut", h.cut},
                          {"side", h.side == Side::low ? "low" : "high"},
                          {"extent", labels_json(g, h.extent)}});
  }
  json order = json::array();
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.less(a, b)) order.push_back({a, b});
    }
  }
  return {{"wall_count", p.wall_count()}, {"halfspaces", halfspaces}, {"strict_order", order}};
}

json to_json(const Pocset& p, const CubeComplex& x) {
  json vertices = json::array();
  for (std::size_t i = 0; i < x.vertices.size(); ++i) {
    json chosen = json::array();
    for (std::size_t w = 0; w < p.wall_count(); ++w) chosen.push_back(x.vertices[i].chosen(w));
    vertices.push_back({{"halfspaces", chosen}, {"phi", labels_json(p.graph(), x.phi[i])}});
  }
  json edges = json::array();
  for (const auto& e : x.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"wall", e.wall}});
  json squares = json::array();
  for (const auto& s : x.squares) squares.push_back({{"corners", s.corners}, {"walls", s.walls}});
  return {{"pocset", to_json(p)}, {"vertices", vertices}, {"edges", edges}, {"squares", squares}};
}

json to_json(const SimplicialGraph& g, const PrimeGraphResult& r, bool with_complex) {
  json phi = json::array();
  for (auto s : r.phi_table) phi.push_back(labels_json(g, s));
  json out = {{"prime_graph", graph_json(r.prime_graph)},
              {"index", r.index},
              {"wall_count", r.pocset.wall_count()},
              {"phi", phi},
              {"qii_criterion", std::string(kQiiCriterion)}};
  if (with_complex) out["complex"] = to_json(r.pocset, r.complex);
  return out;
}

namespace {

json invariants_json(const GraphInvariants& inv) {
  return {{"vertex_count", inv.vertex_count},
          {"dimension", inv.dimension},
          {"clique_factor_size", inv.clique_factor_size},
          {"irreducible_factor_count", inv.irreducible_factor_count},
          {"weak_type_I", inv.weak_type_I},
          {"weak_type_II", inv.weak_type_II},
          {"type_II", inv.type_II},
          {"tuples", inv.tuples}};
}

}  // namespace

json to_json(const QIDecision& d) {
  json out = {{"verdict", std::string(to_string(d.verdict))},
              {"route", std::string(to_string(d.route))},
              {"invariants", {{"first", invariants_json(d.first)},
                              {"second", invariants_json(d.second)}}}};
  json cert = nullptr;
  if (d.isomorphism) cert = {{"isomorphism", *d.isomorphism}};
  if (d.commensuration) {
    cert = {{"prime_graph", graph_json(d.commensuration->prime_graph)},
            {"index_first", d.commensuration->index_first},
            {"index_second", d.commensuration->index_second},
            {"prime_isomorphism", d.commensuration->prime_isomorphism}};
  }
  if (d.distinguishing_invariant) cert = {{"invariant", *d.distinguishing_invariant}};
  if (d.special && d.special->found) {
    cert = {{"host", d.special_in_first ? "first" : "second"},
            {"domain_size", d.special->domain.size()},
            {"defining_graph", graph_json(d.special->subgroup->defining_graph)},
            {"isomorphism", d.special->isomorphism}};
  }
  out["certificate"] = cert;
  if (d.special) out["special_search"] = {{"found", d.special->found},
                                          {"domains_examined", d.special->domains_examined}};
  if (d.prime_first) {
    out["prime_graphs"] = {{"first", graph_json(*d.prime_first)},
                           {"second", graph_json(*d.prime_second)},
                           {"index_first", *d.index_first},
                           {"index_second", *d.index_second}};
  }
  return out;
}

json to_json(const SimplicialGraph& g, const SpecialSubgroupResult& r, const TilingReport& t) {
  json gens = json::array();
  for (const auto& s : r.generators) {
    gens.push_back({{"label", g.label(s.label)},
                    {"basepoint", word_json(g, s.basepoint)},
                    {"conjugate", word_json(g, s.conjugate)},
                    {"power", s.power},
                    {"element", word_json(g, s.element)},
                    {"vertex", generator_label(g, s)}});
  }
  json domain = json::array();
  for (const auto& w : r.domain) domain.push_back(word_json(g, w));
  return {{"generators", gens},
          {"defining_graph", graph_json(r.defining_graph)},
          {"index", r.index},
          {"domain", domain},
          {"tiling", {{"translates", t.translates},
                      {"overlapping_pairs", t.overlapping_pairs},
                      {"uncovered", t.uncovered},
                      {"ok", t.ok()}}}};
}

json to_json(const SimplicialGraph& g, const Ball& b, std::size_t radius) {
  json elements = json::array();
  std::vector<std::size_t> sphere(radius + 1, 0);
  for (const auto& w : b.elements) {
    elements.push_back(word_json(g, w));
    ++sphere[w.size()];
  }
  std::size_t edges = 0;
  for (const auto& a : b.adjacency) edges += a.size();
  return {{"radius", radius},
          {"size", b.elements.size()},
          {"sphere_sizes", sphere},
          {"edge_count", edges / 2},
          {"elements", elements}};
}

json to_json(const Fixture& f) {
  json expected = json::object();
  for (const auto& e : f.expected) {
    json entry = {{"value", e.value}, {"provenance", std::string(to_string(e.provenance))}};
    if (!e.note.empty()) entry["note"] = e.note;
    expected[e.key] = entry;
  }
  return {{"name", f.name},
          {"description", f.description},
          {"graph", graph_json(f.graph)},
          {"expected", expected}};
}

std::string render(json body, std::string_view kind) {
  body["schema_version"] = std::string(kSchemaVersion);
  body["kind"] = std::string(kind);
  return body.dump(2) + "\n";
}

std::string to_dot(const SimplicialGraph& g, std::string_view name) {
  std::ostringstream out;
  auto quote = [](const std::string& s) { return json(s).dump(); };
  out << "graph " << quote(std::string(name)) << " {\n";
  for (const auto& l : g.labels()) out << "  " << quote(l) << ";\n";
  for (const auto& [a, b] : g.label_edges()) out << "  " << quote(a) << " -- " << quote(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace raagqi
