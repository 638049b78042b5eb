#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "raagqi/graph.hpp"
#include "raagqi/raag_geom.hpp"

namespace raagqi {

enum class Verdict { yes, no, unknown };

enum class Route {
  typeII_prime_graph,
  weakI_isomorphism,
  invariant_mismatch,
  /// Isomorphic defining graphs outside the two decided classes.
  graph_isomorphism,
  /// Found by the budgeted special-subgroup search.
  special_subgroup,
  undecided,
};

std::string_view to_string(Verdict v);
std::string_view to_string(Route r);

struct GraphInvariants {
  std::size_t vertex_count = 0;
  /// Clique number, the dimension of the universal cover.
  std::size_t dimension = 0;
  std::size_t clique_factor_size = 0;
  std::size_t irreducible_factor_count = 0;
  bool weak_type_I = false;
  bool weak_type_II = false;
  bool type_II = false;
  /// QII class sizes at each vertex, indexed by vertex.
  std::vector<std::vector<std::size_t>> tuples;
};

GraphInvariants graph_invariants(const SimplicialGraph& g);

struct CommensurationCertificate {
  SimplicialGraph prime_graph;
  std::size_t index_first = 1;
  std::size_t index_second = 1;
  /// Isomorphism from the first prime graph onto the second, by label.
  std::map<std::string, std::string> prime_isomorphism;
};

struct SpecialSearchResult {
  bool found = false;
  /// The least domain (by size, then shortlex element order) that works.
  std::vector<Word> domain;
  std::optional<SpecialSubgroupResult> subgroup;
  /// Isomorphism from the defining graph onto the target, by label.
  std::map<std::string, std::string> isomorphism;
  std::size_t domains_examined = 0;
};

struct QIDecision {
  Verdict verdict = Verdict::unknown;
  Route route = Route::undecided;
  /// Isomorphism witness G1 -> G2 on the weak type I route.
  std::optional<std::map<std::string, std::string>> isomorphism;
  std::optional<CommensurationCertificate> commensuration;
  std::optional<SpecialSearchResult> special;
  /// Whether the searched domains lie in the first graph's complex.
  bool special_in_first = true;
  /// Name of the invariant that differs on the mismatch route.
  std::optional<std::string> distinguishing_invariant;
  /// Prime graphs and indices, filled whenever both graphs are type II.
  std::optional<SimplicialGraph> prime_first;
  std::optional<SimplicialGraph> prime_second;
  std::optional<std::size_t> index_first;
  std::optional<std::size_t> index_second;
  GraphInvariants first;
  GraphInvariants second;
};

struct QiOptions {
  /// When set, domains of up to this many vertices in the graph with fewer
  /// vertices are searched before answering unknown.
  std::optional<std::size_t> budget;
  std::size_t cap = kDefaultCap;
};

QIDecision qi_equivalent(const SimplicialGraph& a, const SimplicialGraph& b,
                         const QiOptions& options = {});

/// Present iff the prime graphs are isomorphic. Throws PreconditionError
/// unless both graphs are type II.
std::optional<CommensurationCertificate> commensuration_certificate(const SimplicialGraph& a,
                                                                    const SimplicialGraph& b);

/// Searches convex domains through the identity with at most `budget`
/// vertices whose special subgroup has defining graph isomorphic to
/// `target`. A hit is a finite-index subgroup, so it certifies
/// commensurability for any `g`. Throws CapExceeded when the enumeration
/// ball is too large.
SpecialSearchResult qi_search_special(const SimplicialGraph& g, const SimplicialGraph& target,
                                      std::size_t budget, std::size_t cap = kDefaultCap);

}  // namespace raagqi
