#pragma once

// JSON (de)serialisation for every report type. Edges are always written as
// [u, v] with u < v, lists in EdgeId (lexicographic) order, so identical
// inputs give byte-identical output.

#include "rainbow/coloring.hpp"
#include "rainbow/copies.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/packing.hpp"
#include "rainbow/stability.hpp"

#include "json.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

inline constexpr int kReportFormatVersion = 1;

Json edge_json(const Edge &e);
Json graph_json(const Graph &g);
Json pattern_json(const HPattern &h);

/// [{"edge":[u,v],"color":c}, ...]
Json coloring_json(const Graph &g, const EdgeColoring &chi);
/// Inverse of coloring_json. Missing edges raise ColoringError, malformed
/// entries or edges absent from g raise ParseError.
EdgeColoring coloring_from_json(const Graph &g, const Json &j);

Json partition_json(const Graph &g, const MatchingPartition &p);
Json copy_json(const Graph &g, const SubgraphCopy &c);
/// {"copies":[...], "single_edges":[...], "t":t, "N":k, "mode":...}
Json decomposition_json(const Graph &g, const Decomposition &d);
Json census_json(std::span<const EdgeCensus> census);

Json extremal_json(const ExtremalRecord &rec);
Json theorem_json(std::span<const TheoremRow> rows);
Json partition_result_json(const PartitionResult &r);
Json bound_reports_json(std::span<const BoundReport> rows);
Json sparsify_json(const SparsifyTrial &t);
Json hypergraph_json(const Graph &g, const HypergraphMatching &m);

/// Deterministic text form used for every file the CLI writes.
std::string dump(const Json &j);

} // namespace rainbow
