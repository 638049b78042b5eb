#include "raagqi/prime_partition.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

#include "raagqi/classify.hpp"
#include "raagqi/isomorphism.hpp"

namespace raagqi {

VertexSet PrimePartitionRecord::factor_vertices(std::size_t m) const {
  VertexSet out;
  for (const auto& b : factors.at(m)) out |= b.component;
  return out;
}

std::size_t gcd_of(const std::vector<std::size_t>& values) {
  std::size_t d = 0;
  for (auto n : values) d = std::gcd(d, n);
  return d == 0 ? 1 : d;
}

std::vector<BranchDatum> branch_data(const SimplicialGraph& g, Vertex v) {
  check_vertex(g, v);
  std::vector<BranchDatum> out;
  for (auto c : components_minus(g, star(g, v))) {
    VertexSet touched;
    for (Vertex u : c) touched |= g.neighbors(u);
    out.push_back({c, touched - c});
  }
  return out;
}

bool boundary_fixing_qii(const SimplicialGraph& g, Vertex, const BranchDatum& a,
                         const BranchDatum& b) {
  if (a == b) return true;
  if (a.boundary != b.boundary || a.component.size() != b.component.size()) return false;
  const SimplicialGraph ga = induced_subgraph(g, a.component | a.boundary);
  const SimplicialGraph gb = induced_subgraph(g, b.component | b.boundary);
  // Boundary vertices are pinned by colouring each with its own index.
  auto colours = [&](const SimplicialGraph& piece) {
    std::vector<std::uint32_t> c(piece.order(), 0);
    for (Vertex i = 0; i < piece.order(); ++i) {
      Vertex original = g.index_of(piece.label(i));
      if (a.boundary.contains(original)) c[i] = original + 1;
    }
    return c;
  };
  return find_isomorphism(ga, gb, colours(ga), colours(gb)).has_value();
}

bool qii_equivalent(const SimplicialGraph& g, Vertex v, const BranchDatum& a,
                    const BranchDatum& b) {
  const auto data = branch_data(g, v);
  for (const auto* d : {&a, &b}) {
    if (std::find(data.begin(), data.end(), *d) == data.end()) {
      throw GraphError("branch datum is not a component of G \\ St(" + g.label(v) + ")");
    }
  }
  return boundary_fixing_qii(g, v, a, b);
}

PrimePartitionRecord prime_partition(const SimplicialGraph& g, Vertex v,
                                     const PartitionPolicy& policy) {
  PrimePartitionRecord rec;
  rec.vertex = v;
  for (const auto& datum : branch_data(g, v)) {
    auto it = std::find_if(rec.classes.begin(), rec.classes.end(), [&](const QIIClass& c) {
      return policy.qii(g, v, c.members.front(), datum);
    });
    if (it == rec.classes.end()) {
      rec.classes.push_back({{datum}, datum.boundary});
    } else {
      it->members.push_back(datum);
    }
  }

  // Class order: member count, then the shape of a closed piece, then the
  // least vertex of the first member.
  auto key = [&](const QIIClass& c) {
    const BranchDatum& m = c.members.front();
    const VertexSet piece = m.component | m.boundary;
    return std::make_tuple(c.members.size(), piece.size(),
                           induced_subgraph(g, piece).edge_count(), m.component.front());
  };
  std::stable_sort(rec.classes.begin(), rec.classes.end(),
                   [&](const QIIClass& x, const QIIClass& y) { return key(x) < key(y); });

  for (const auto& c : rec.classes) rec.tuple.push_back(c.members.size());
  rec.d = gcd_of(rec.tuple);

  if (policy.permutation_seed != 0) {
    for (std::size_t i = 0; i < rec.classes.size(); ++i) {
      std::mt19937_64 rng(policy.permutation_seed + i);
      std::shuffle(rec.classes[i].members.begin(), rec.classes[i].members.end(), rng);
    }
  }

  rec.factors.assign(rec.d, {});
  for (const auto& c : rec.classes) {
    const std::size_t per_factor = c.members.size() / rec.d;
    for (std::size_t j = 0; j < c.members.size(); ++j) {
      rec.factors[j / per_factor].push_back(c.members[j]);
    }
  }
  for (auto& f : rec.factors) {
    std::sort(f.begin(), f.end(), [](const BranchDatum& x, const BranchDatum& y) {
      return canonical_less(x.component, y.component);
    });
  }
  return rec;
}

bool is_prime_raag(const SimplicialGraph& g, const PartitionPolicy& policy) {
  if (!is_type_II(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!prime_partition(g, v, policy).prime()) return false;
  }
  return true;
}

}  // namespace raagqi
