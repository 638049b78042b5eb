#pragma once

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "raagqi/fixtures.hpp"
#include "raagqi/graph.hpp"
#include "raagqi/raag_geom.hpp"

namespace support {

using raagqi::Fixture;
using raagqi::SimplicialGraph;

const SimplicialGraph& fx(const std::string& name);

/// Same graph under a random bijection onto fresh labels, so the vertex
/// order changes too.
SimplicialGraph random_relabel(const SimplicialGraph& g, std::mt19937_64& rng);

/// G(n, p) on labels v0 .. v{n-1}.
SimplicialGraph random_graph(std::size_t n, double p, std::mt19937_64& rng);

/// Connected graphs only (resamples).
SimplicialGraph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

/// {e, x} and {e, x, x^2} for the least generator x.
std::vector<raagqi::Word> edge_domain(const SimplicialGraph& g);
std::vector<raagqi::Word> segment_domain(const SimplicialGraph& g);

/// Library value for one recorded expectation key of a fixture.
nlohmann::json evaluate(const Fixture& f, const std::string& key);

struct ExpectationResult {
  std::string fixture;
  std::string key;
  std::string provenance;
  nlohmann::json expected;
  nlohmann::json actual;
  bool ok = false;
  std::string line() const;
};

std::vector<ExpectationResult> check_all_expectations();

/// Fixtures whose graphs are type II.
std::vector<const Fixture*> type_II_fixtures();

}  // namespace support
