#include "raagqi/out_gens.hpp"

#include "raagqi/isomorphism.hpp"

namespace raagqi {

std::vector<TransvectionRecord> transvections(const SimplicialGraph& g) {
  std::vector<TransvectionRecord> out;
  for (Vertex w = 0; w < g.order(); ++w) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v == w) continue;
      if (link(g, w).is_subset_of(star(g, v))) out.push_back({w, v, g.adjacent(v, w)});
    }
  }
  return out;
}

std::vector<PartialConjugationRecord> partial_conjugations(const SimplicialGraph& g) {
  std::vector<PartialConjugationRecord> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto comps = components_minus(g, star(g, v));
    if (comps.size() < 2) continue;
    for (auto c : comps) out.push_back({v, c});
  }
  return out;
}

bool has_nonadjacent_transvection(const SimplicialGraph& g) {
  for (const auto& t : transvections(g)) {
    if (!t.adjacent) return true;
  }
  return false;
}

bool out_is_finite(const SimplicialGraph& g) {
  return transvections(g).empty() && partial_conjugations(g).empty();
}

OutReport out_report(const SimplicialGraph& g) {
  OutReport r;
  r.inversion_count = g.order();
  r.graph_automorphism_count = automorphism_count(g);
  r.transvections = transvections(g);
  r.partial_conjugations = partial_conjugations(g);
  r.out_finite = r.transvections.empty() && r.partial_conjugations.empty();
  return r;
}

}  // namespace raagqi
