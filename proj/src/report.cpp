#include "rainbow/report.hpp"
#include "rainbow/errors.hpp"

#include <cmath>

namespace rainbow {

Json edge_json(const Edge &e) { return Json::array({e.u, e.v}); }

Json graph_json(const Graph &g) {
  Json j;
  j["n"] = g.order();
  j["e"] = g.size();
  j["graph6"] = write_graph6(g);
  return j;
}

Json pattern_json(const HPattern &h) {
  Json j;
  j["name"] = h.name();
  j["graph6"] = write_graph6(h.graph());
  j["edges"] = h.edge_count();
  j["chromatic_number"] = h.chromatic_number();
  j["is_clique"] = h.is_clique();
  return j;
}

Json coloring_json(const Graph &g, const EdgeColoring &chi) {
  Json out = Json::array();
  for (EdgeId e = 0; e < g.size(); ++e)
    out.push_back(Json{{"edge", edge_json(g.edge(e))}, {"color", chi[e]}});
  return out;
}

EdgeColoring coloring_from_json(const Graph &g, const Json &j) {
  if (!j.is_array())
    throw ParseError("coloring must be a JSON array", 0);
  EdgeColoring chi{std::vector<Color>(static_cast<std::size_t>(g.size()), kUncolored)};
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json &item = j[i];
    if (!item.is_object() || !item.contains("edge") || !item.contains("color") ||
        !item["edge"].is_array() || item["edge"].size() != 2 ||
        !item["color"].is_number_integer())
      throw ParseError("malformed coloring entry", i);
    const Vertex a = item["edge"][0].get<Vertex>();
    const Vertex b = item["edge"][1].get<Vertex>();
    const Color c = item["color"].get<Color>();
    const EdgeId id = g.edge_id(a, b);
    if (id == kNoEdge)
      throw ParseError("coloring names a pair that is not an edge", i);
    if (c < 0)
      throw ParseError("colors must be non-negative", i);
    chi.color_of[static_cast<std::size_t>(id)] = c;
  }
  for (EdgeId e = 0; e < g.size(); ++e)
    if (chi[e] == kUncolored)
      throw ColoringError("coloring misses edge " + std::to_string(g.edge(e).u) + "-" +
                          std::to_string(g.edge(e).v));
  return chi;
}

Json partition_json(const Graph &g, const MatchingPartition &p) {
  Json out = Json::array();
  for (const auto &block : p.blocks) {
    Json b = Json::array();
    for (EdgeId e : block)
      b.push_back(edge_json(g.edge(e)));
    out.push_back(std::move(b));
  }
  return out;
}

Json copy_json(const Graph &g, const SubgraphCopy &c) {
  Json out = Json::array();
  for (EdgeId e : c.edges)
    out.push_back(edge_json(g.edge(e)));
  return out;
}

Json decomposition_json(const Graph &g, const Decomposition &d) {
  Json j;
  Json copies = Json::array();
  for (const auto &c : d.copies)
    copies.push_back(copy_json(g, c));
  Json singles = Json::array();
  for (EdgeId e : d.single_edges)
    singles.push_back(edge_json(g.edge(e)));
  j["copies"] = std::move(copies);
  j["single_edges"] = std::move(singles);
  j["t"] = d.parts();
  j["N"] = d.copies.size();
  j["mode"] = to_string(d.mode);
  return j;
}

Json census_json(std::span<const EdgeCensus> census) {
  Json out = Json::array();
  for (const auto &row : census)
    out.push_back(Json{{"edge", edge_json(row.edge)},
                       {"rainbow", row.rainbow},
                       {"non_rainbow", row.non_rainbow}});
  return out;
}

Json extremal_json(const ExtremalRecord &rec) {
  Json j;
  j["n"] = rec.n;
  j["pattern"] = rec.pattern;
  j["rainbow"] = rec.rainbow;
  j["value"] = rec.value;
  j["reference_ex"] = rec.reference;
  j["exceeds_reference"] = rec.exceeds_reference;
  j["maximizers"] = rec.maximizers;
  if (rec.rainbow) {
    Json colorings = Json::array();
    for (std::size_t i = 0; i < rec.witness_colorings.size(); ++i)
      colorings.push_back(
          partition_json(parse_graph6(rec.maximizers[i]), rec.witness_colorings[i]));
    j["witness_colorings"] = std::move(colorings);
  }
  j["turan_is_maximizer"] = rec.turan_is_maximizer;
  j["turan_unique_maximizer"] = rec.turan_unique_maximizer;
  j["complete"] = rec.complete;
  j["graphs_swept"] = rec.graphs_swept;
  if (!rec.per_graph.empty()) {
    Json rows = Json::array();
    for (const auto &s : rec.per_graph) {
      Json row{{"graph6", s.graph6}, {"e", s.edges}, {"phi", s.phi}};
      if (rec.rainbow)
        row["phi_R_max"] = s.phi_R_max;
      row["complete"] = s.complete;
      rows.push_back(std::move(row));
    }
    j["per_graph"] = std::move(rows);
  }
  return j;
}

Json theorem_json(std::span<const TheoremRow> rows) {
  Json out = Json::array();
  for (const auto &r : rows)
    out.push_back(Json{{"n", r.n},
                       {"value", r.value},
                       {"expected", r.expected},
                       {"turan_unique_maximizer", r.turan_unique_maximizer},
                       {"maximizers", r.maximizers}});
  return out;
}

Json partition_result_json(const PartitionResult &r) {
  Json j;
  j["parts"] = r.parts;
  j["internal_edges"] = r.internal_edges;
  j["optimal"] = r.optimal;
  return j;
}

Json bound_reports_json(std::span<const BoundReport> rows) {
  Json out = Json::array();
  for (const auto &r : rows) {
    Json row;
    row["n"] = r.n;
    row["r"] = r.r;
    row["m"] = r.m;
    row["edges"] = r.edges;
    row["graphs"] = r.graphs;
    row["min_packing"] = r.min_packing;
    row["hoi_bound"] = r.hoi_bound;
    row["hoi_bound_ceil"] = static_cast<std::int64_t>(std::ceil(r.hoi_bound - 1e-12));
    row["gyori_tuza_reference"] =
        r.gyori_tuza_reference ? Json(*r.gyori_tuza_reference) : Json(nullptr);
    row["witnesses"] = r.witnesses;
    row["complete"] = r.complete;
    out.push_back(std::move(row));
  }
  return out;
}

Json sparsify_json(const SparsifyTrial &t) {
  Json j;
  j["part_sizes"] = t.part_sizes;
  j["densities"] = t.densities;
  j["probabilities"] = t.probabilities;
  j["designated_edge"] = edge_json(t.designated);
  j["host_edges"] = t.host_edges;
  j["family_size"] = t.family_size;
  j["trials"] = t.closed.size();
  j["mean"] = t.mean;
  j["variance"] = t.variance;
  j["standard_error"] = t.standard_error;
  j["expectation"] = t.expectation;
  j["z_score"] = t.z_score;
  j["eta"] = t.eta;
  j["outside_eta_fraction"] = t.outside_eta_fraction;
  j["closed"] = t.closed;
  return j;
}

Json hypergraph_json(const Graph &g, const HypergraphMatching &m) {
  Json j;
  Json copies = Json::array();
  for (const auto &c : m.packing.copies)
    copies.push_back(copy_json(g, c));
  j["copies"] = std::move(copies);
  j["size"] = m.packing.size();
  j["covered_fraction"] = m.covered_fraction;
  j["stats"] = Json{{"vertices", m.stats.vertices},
                    {"hyperedges", m.stats.hyperedges},
                    {"uniformity", m.stats.uniformity},
                    {"max_degree", m.stats.max_degree},
                    {"max_codegree", m.stats.max_codegree}};
  return j;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace rainbow
