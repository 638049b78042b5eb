#include "raagqi/qi_decide.hpp"

#include <algorithm>
#include <set>

#include "raagqi/classify.hpp"
#include "raagqi/cubulation.hpp"
#include "raagqi/isomorphism.hpp"
#include "raagqi/prime_partition.hpp"

namespace raagqi {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::typeII_prime_graph: return "typeII-prime-graph";
    case Route::weakI_isomorphism: return "weakI-isomorphism";
    case Route::invariant_mismatch: return "invariant-mismatch";
    case Route::graph_isomorphism: return "graph-isomorphism";
    case Route::special_subgroup: return "special-subgroup";
    case Route::undecided: return "undecided";
  }
  return "undecided";
}

GraphInvariants graph_invariants(const SimplicialGraph& g) {
  GraphInvariants inv;
  inv.vertex_count = g.order();
  inv.dimension = clique_number(g);
  const auto join = join_decomposition(g);
  inv.clique_factor_size = join.clique_factor.size();
  inv.irreducible_factor_count = join.irreducible_factors.size();
  inv.weak_type_I = is_weak_type_I(g);
  inv.weak_type_II = is_weak_type_II(g);
  inv.type_II = is_type_II(g);
  for (Vertex v = 0; v < g.order(); ++v) inv.tuples.push_back(prime_partition(g, v).tuple);
  return inv;
}

std::optional<CommensurationCertificate> commensuration_certificate(const SimplicialGraph& a,
                                                                    const SimplicialGraph& b) {
  if (!is_type_II(a) || !is_type_II(b)) throw PreconditionError("both graphs must be of type II");
  const auto pa = prime_graph(a);
  const auto pb = prime_graph(b);
  auto iso = find_isomorphism(pa.prime_graph, pb.prime_graph);
  if (!iso) return std::nullopt;
  return CommensurationCertificate{pa.prime_graph, pa.index, pb.index,
                                   witness_labels(pa.prime_graph, pb.prime_graph, *iso)};
}

SpecialSearchResult qi_search_special(const SimplicialGraph& g, const SimplicialGraph& target,
                                      std::size_t budget, std::size_t cap) {
  SpecialSearchResult out;
  if (budget == 0) return out;
  const Ball b = ball(g, budget - 1, cap);

  // Connected vertex sets of the Cayley graph containing the identity, grown
  // one neighbour at a time.
  std::vector<std::set<std::vector<std::size_t>>> levels(1);
  levels[0].insert({0});
  while (levels.size() < budget) {
    std::set<std::vector<std::size_t>> next;
    for (const auto& s : levels.back()) {
      for (auto i : s) {
        for (auto n : b.adjacency[i]) {
          if (std::binary_search(s.begin(), s.end(), n)) continue;
          auto grown = s;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), n), n);
          next.insert(std::move(grown));
          if (next.size() > cap) throw CapExceeded("too many candidate domains");
        }
      }
    }
    levels.push_back(std::move(next));
  }

  for (const auto& level : levels) {
    std::vector<std::vector<Word>> domains;
    for (const auto& s : level) {
      std::vector<Word> d;
      for (auto i : s) d.push_back(b.elements[i]);
      std::sort(d.begin(), d.end(), shortlex_less);
      domains.push_back(std::move(d));
    }
    std::sort(domains.begin(), domains.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), shortlex_less);
    });
    for (const auto& d : domains) {
      if (!is_convex(g, d, cap)) continue;
      ++out.domains_examined;
      auto r = special_subgroup(g, d, cap);
      if (r.defining_graph.order() != target.order()) continue;
      if (auto iso = find_isomorphism(r.defining_graph, target)) {
        out.found = true;
        out.domain = d;
        out.isomorphism = witness_labels(r.defining_graph, target, *iso);
        out.subgroup = std::move(r);
        return out;
      }
    }
  }
  return out;
}

QIDecision qi_equivalent(const SimplicialGraph& a, const SimplicialGraph& b,
                         const QiOptions& options) {
  QIDecision d;
  d.first = graph_invariants(a);
  d.second = graph_invariants(b);

  if (d.first.type_II && d.second.type_II) {
    const auto pa = prime_graph(a);
    const auto pb = prime_graph(b);
    d.prime_first = pa.prime_graph;
    d.prime_second = pb.prime_graph;
    d.index_first = pa.index;
    d.index_second = pb.index;
  }

  if (d.first.weak_type_I && d.second.weak_type_I) {
    d.route = Route::weakI_isomorphism;
    if (auto iso = find_isomorphism(a, b)) {
      d.verdict = Verdict::yes;
      d.isomorphism = witness_labels(a, b, *iso);
    } else {
      d.verdict = Verdict::no;
    }
    return d;
  }

  if (d.first.type_II && d.second.type_II) {
    d.route = Route::typeII_prime_graph;
    if (auto iso = find_isomorphism(*d.prime_first, *d.prime_second)) {
      d.verdict = Verdict::yes;
      d.commensuration = CommensurationCertificate{
          *d.prime_first, *d.index_first, *d.index_second,
          witness_labels(*d.prime_first, *d.prime_second, *iso)};
    } else {
      d.verdict = Verdict::no;
    }
    return d;
  }

  auto mismatch = [&](std::string name) {
    d.verdict = Verdict::no;
    d.route = Route::invariant_mismatch;
    d.distinguishing_invariant = std::move(name);
    return d;
  };
  if (d.first.weak_type_II != d.second.weak_type_II) return mismatch("weak_type_II");
  if (d.first.type_II != d.second.type_II) return mismatch("type_II");
  if (d.first.dimension != d.second.dimension) return mismatch("dimension");
  if (d.first.clique_factor_size != d.second.clique_factor_size) {
    return mismatch("clique_factor_size");
  }
  if (d.first.irreducible_factor_count != d.second.irreducible_factor_count) {
    return mismatch("irreducible_factor_count");
  }

  if (auto iso = find_isomorphism(a, b)) {
    d.verdict = Verdict::yes;
    d.route = Route::graph_isomorphism;
    d.isomorphism = witness_labels(a, b, *iso);
    return d;
  }

  // A special subgroup of G has at least |V(G)| generators, and exactly
  // |V(G)| only for the trivial domain, so only the smaller graph can host
  // the other.
  if (options.budget) {
    const bool from_first = a.order() <= b.order();
    auto found = from_first ? qi_search_special(a, b, *options.budget, options.cap)
                            : qi_search_special(b, a, *options.budget, options.cap);
    if (found.found) {
      d.verdict = Verdict::yes;
      d.route = Route::special_subgroup;
    }
    d.special_in_first = from_first;
    d.special = std::move(found);
  }
  return d;
}

}  // namespace raagqi
