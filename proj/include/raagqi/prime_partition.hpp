#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "raagqi/graph.hpp"

namespace raagqi {

/// A component C of G \ St(v) together with its boundary: the vertices
/// outside C adjacent to some vertex of C. The boundary always lies in lk(v).
struct BranchDatum {
  VertexSet component;
  VertexSet boundary;
  bool operator==(const BranchDatum&) const = default;
};

/// One quasi-isometrically indistinguishable class of components at a vertex.
struct QIIClass {
  std::vector<BranchDatum> members;
  VertexSet shared_boundary;
};

/// Prime partition data at one vertex. `classes` is in the class order used
/// for the tuple; `factors` holds the d prime factors, each a list of
/// components.
struct PrimePartitionRecord {
  Vertex vertex = 0;
  std::vector<QIIClass> classes;
  std::vector<std::size_t> tuple;
  std::size_t d = 1;
  std::vector<std::vector<BranchDatum>> factors;

  bool prime() const { return d == 1; }
  /// Union of the components in factor m (0-based).
  VertexSet factor_vertices(std::size_t m) const;
};

/// Decides whether two components at the same vertex are QII.
using QiiPredicate =
    std::function<bool(const SimplicialGraph&, Vertex, const BranchDatum&, const BranchDatum&)>;

/// Name reported alongside partition output so consumers know which QII test
/// produced it.
inline constexpr std::string_view kQiiCriterion = "boundary-fixing-isomorphism";

/// Boundaries equal and the full subgraphs on C1 + boundary and C2 + boundary
/// are isomorphic by a map that is the identity on the boundary.
bool boundary_fixing_qii(const SimplicialGraph& g, Vertex v, const BranchDatum& a,
                         const BranchDatum& b);

/// Choices that the prime partition leaves free.
struct PartitionPolicy {
  QiiPredicate qii = boundary_fixing_qii;
  /// 0 keeps the canonical member order inside each class. Any other value
  /// shuffles members (and so the factor assignment) deterministically.
  std::uint64_t permutation_seed = 0;
};

/// One datum per component of G \ St(v), ordered by least vertex.
std::vector<BranchDatum> branch_data(const SimplicialGraph& g, Vertex v);

/// QII test with the default criterion. Throws GraphError when either datum
/// is not a component at v.
bool qii_equivalent(const SimplicialGraph& g, Vertex v, const BranchDatum& a,
                    const BranchDatum& b);

PrimePartitionRecord prime_partition(const SimplicialGraph& g, Vertex v,
                                     const PartitionPolicy& policy = {});

/// Type II and every vertex prime.
bool is_prime_raag(const SimplicialGraph& g, const PartitionPolicy& policy = {});

std::size_t gcd_of(const std::vector<std::size_t>& values);

}  // namespace raagqi
