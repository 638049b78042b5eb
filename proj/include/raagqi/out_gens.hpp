#pragma once

#include <cstdint>
#include <vector>

#include "raagqi/graph.hpp"

namespace raagqi {

/// Transvection w -> w v, defined when lk(w) is inside St(v).
struct TransvectionRecord {
  Vertex dominated;   // w
  Vertex dominating;  // v
  bool adjacent;
  bool operator==(const TransvectionRecord&) const = default;
};

/// Partial conjugation of one component of G \ St(pivot) by the pivot.
struct PartialConjugationRecord {
  Vertex pivot;
  VertexSet component;
  bool operator==(const PartialConjugationRecord&) const = default;
};

/// Generators of Out(G(graph)) by type. Inversions and graph automorphisms
/// are only counted.
struct OutReport {
  std::uint64_t inversion_count = 0;
  std::uint64_t graph_automorphism_count = 0;
  std::vector<TransvectionRecord> transvections;
  std::vector<PartialConjugationRecord> partial_conjugations;
  bool out_finite = true;
};

/// All ordered pairs (w, v), w != v, with lk(w) inside St(v), sorted by
/// (w, v).
std::vector<TransvectionRecord> transvections(const SimplicialGraph& g);

/// One record per component of G \ St(v) for every v where that graph has at
/// least two components. A pivot with k components gives k records even
/// though their product is inner.
std::vector<PartialConjugationRecord> partial_conjugations(const SimplicialGraph& g);

bool has_nonadjacent_transvection(const SimplicialGraph& g);
bool out_is_finite(const SimplicialGraph& g);
OutReport out_report(const SimplicialGraph& g);

}  // namespace raagqi
