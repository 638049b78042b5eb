#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "raagqi/graph.hpp"

namespace raagqi {

/// Where an expected value comes from: stated in the source mathematics,
/// immediate from the definitions, or computed by hand or by an independent
/// oracle.
enum class Provenance { paper, trivial, derived };

std::string_view to_string(Provenance p);

struct ExpectedValue {
  std::string key;
  nlohmann::json value;
  Provenance provenance = Provenance::derived;
  std::string note;
};

struct Fixture {
  std::string name;
  std::string description;
  SimplicialGraph graph;
  std::vector<ExpectedValue> expected;

  /// Throws std::out_of_range for a key the fixture does not record.
  const ExpectedValue& expect(std::string_view key) const;
  bool has(std::string_view key) const;
};

/// Cycle on prefix1 .. prefixN.
SimplicialGraph cycle(std::size_t n, const std::string& prefix);
SimplicialGraph complete_graph(std::size_t n, const std::string& prefix);
SimplicialGraph path(std::size_t n, const std::string& prefix);

/// Identifies the vertices of `piece` named in `identify` with vertices of
/// `base` and returns the union. The identified vertices must form a closed
/// star St(x) in `piece` and St(identify[x]) in `base`, spanning the same
/// graph under the identification. Other piece labels must be new.
SimplicialGraph glue_along_closed_star(const SimplicialGraph& base, const SimplicialGraph& piece,
                                       const std::map<std::string, std::string>& identify);

/// Same, for an identification of one edge.
SimplicialGraph glue_along_edge(const SimplicialGraph& base, const SimplicialGraph& piece,
                                const std::map<std::string, std::string>& identify);

/// The registry, in a fixed order.
const std::vector<Fixture>& fixtures();
/// Throws std::out_of_range for an unknown name.
const Fixture& fixture(std::string_view name);

}  // namespace raagqi
