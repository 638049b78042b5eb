#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "raagqi/classify.hpp"
#include "raagqi/cubulation.hpp"
#include "raagqi/fixtures.hpp"
#include "raagqi/out_gens.hpp"
#include "raagqi/prime_partition.hpp"
#include "raagqi/qi_decide.hpp"
#include "raagqi/raag_geom.hpp"

namespace raagqi {

inline constexpr std::string_view kSchemaVersion = "raagqi/1";

using nlohmann::json;

/// {"vertices": [...], "edges": [[a, b], ...]}, the same shape parse_graph
/// accepts.
json graph_json(const SimplicialGraph& g);
json labels_json(const SimplicialGraph& g, VertexSet s);

json to_json(const SimplicialGraph& g, const TypeReport& r);
/// Plain-language reasons behind each flag of `r`.
json explain(const SimplicialGraph& g, const TypeReport& r);
json to_json(const SimplicialGraph& g, const OutReport& r);
json to_json(const SimplicialGraph& g, const PrimePartitionRecord& r);
json to_json(const Pocset& p);
json to_json(const Pocset& p, const CubeComplex& x);
json to_json(const SimplicialGraph& g, const PrimeGraphResult& r, bool with_complex);
json to_json(const QIDecision& d);
json to_json(const SimplicialGraph& g, const SpecialSubgroupResult& r, const TilingReport& t);
json to_json(const SimplicialGraph& g, const Ball& b, std::size_t radius);
json to_json(const Fixture& f);

/// Adds "schema_version" and "kind", then pretty-prints with sorted keys and
/// a trailing newline.
std::string render(json body, std::string_view kind);

/// Graphviz: one node statement per vertex, one edge statement per edge.
std::string to_dot(const SimplicialGraph& g, std::string_view name);

}  // namespace raagqi
