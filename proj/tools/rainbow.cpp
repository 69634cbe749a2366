// rainbow: command-line front end for the decomposition library.
//
//   rainbow decompose   --graph G --pattern H --coloring C
//   rainbow census      --graph G --pattern H --coloring C
//   rainbow pack        --graph G --pattern H --mode exact|greedy|local|hypergraph [--seed S]
//   rainbow extremal    --n N (--r R | --pattern H) --mode rainbow|uncolored
//   rainbow theorem     --n N
//   rainbow stability   --graph G [--k K] --mode exact|heuristic [--seed S]
//   rainbow edk         --n N --r R --m 1..3 [--format csv|json]
//   rainbow mc-sparsify --r R --part-size S --density D --p P --trials T --seed S
//   rainbow finder      --k K --part-size S [--no-internal-edge] --coloring C
//   rainbow enumerate   --n N
//
// Exit codes: 0 ok, 1 I/O, 2 budget, 3 parse/usage, 4 invariant violation.

#include "rainbow/coloring.hpp"
#include "rainbow/copies.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/packing.hpp"
#include "rainbow/report.hpp"
#include "rainbow/stability.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace rainbow;

namespace {

enum Exit { kOk = 0, kIo = 1, kBudget = 2, kParse = 3, kInvariant = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string graph;
  std::string pattern;
  std::string coloring = "greedy";
  std::string mode;
  int n = 0;
  int r = 3;
  int k = 0;
  std::string m = "1";
  int trials = 2000;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget_nodes = 10'000'000;
  std::uint64_t budget_partitions = 200'000;
  int edge_ceiling = 12;
  int workers = 1;
  std::string out;
  std::string format;
  int part_size = 40;
  double density = 0.5;
  double p = 0.5;
  double eta = 0.1;
  bool no_internal_edge = false;
  bool per_graph = false;
};

// --- input resolution -------------------------------------------------------

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_int(std::string_view s, std::size_t offset) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected an integer, got '" + std::string(s) + "'", offset);
  return v;
}

std::vector<int> parse_int_list(std::string_view s, std::size_t offset) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? s.size() : comma;
    out.push_back(parse_int(s.substr(start, end - start), offset + start));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

/// Generators (turan:n:k, complete:n, complete_multipartite:a,b,c, cycle:n,
/// path:n, star:k, empty:n), a file holding one graph6 line, or a graph6
/// literal.
Graph resolve_graph(const std::string &spec) {
  if (spec.empty())
    throw ParseError("--graph is required", 0);
  const std::size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string_view rest = std::string_view(spec).substr(colon + 1);
    const std::size_t at = colon + 1;
    if (kind == "turan") {
      const std::size_t c2 = rest.find(':');
      if (c2 == std::string_view::npos)
        throw ParseError("turan:n:k expects two integers", at);
      return turan_graph(parse_int(rest.substr(0, c2), at), parse_int(rest.substr(c2 + 1), at + c2 + 1));
    }
    if (kind == "complete")
      return complete_graph(parse_int(rest, at));
    if (kind == "complete_multipartite")
      return complete_multipartite(parse_int_list(rest, at));
    if (kind == "cycle")
      return cycle_graph(parse_int(rest, at));
    if (kind == "path")
      return path_graph(parse_int(rest, at));
    if (kind == "star")
      return star_graph(parse_int(rest, at));
    if (kind == "empty")
      return empty_graph(parse_int(rest, at));
    if (kind == "file")
      return resolve_graph(spec.substr(at));
    throw ParseError("unknown graph generator '" + kind + "'", 0);
  }
  if (std::filesystem::is_regular_file(spec)) {
    std::istringstream lines(read_file(spec));
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r')
        line.pop_back();
      if (line.empty() || line[0] == '#')
        continue;
      return parse_graph6(line);
    }
    throw ParseError("no graph6 line in " + spec, 0);
  }
  return parse_graph6(spec);
}

HPattern resolve_pattern(const RunConfig &cfg) {
  const std::string &spec = cfg.pattern;
  if (spec.empty())
    return HPattern::clique(cfg.r);
  if ((spec[0] == 'K' || spec[0] == 'k') && spec.size() > 1)
    return HPattern::clique(parse_int(std::string_view(spec).substr(1), 1));
  return HPattern(resolve_graph(spec));
}

EdgeColoring resolve_coloring(const Graph &g, const std::string &spec) {
  if (spec == "greedy")
    return greedy_edge_coloring(g);
  if (spec == "vizing")
    return vizing_coloring(g);
  if (spec == "all-distinct")
    return all_distinct_coloring(g);
  if (spec.empty())
    throw ParseError("--coloring is required", 0);
  Json j;
  try {
    j = Json::parse(read_file(spec));
  } catch (const Json::parse_error &e) {
    throw ParseError(std::string("coloring file is not JSON: ") + e.what(), e.byte);
  }
  if (j.is_object() && j.contains("coloring"))
    j = j["coloring"];
  return coloring_from_json(g, j);
}

std::vector<std::int64_t> parse_m_values(const std::string &spec) {
  const std::size_t dots = spec.find("..");
  std::vector<std::int64_t> out;
  if (dots != std::string::npos) {
    const int lo = parse_int(std::string_view(spec).substr(0, dots), 0);
    const int hi = parse_int(std::string_view(spec).substr(dots + 2), dots + 2);
    if (hi < lo)
      throw ParseError("empty m range '" + spec + "'", 0);
    for (int m = lo; m <= hi; ++m)
      out.push_back(m);
    return out;
  }
  for (int m : parse_int_list(spec, 0))
    out.push_back(m);
  return out;
}

std::uint64_t require_seed(const RunConfig &cfg) {
  if (!cfg.seed)
    throw ParseError("command '" + cfg.command + "' is randomized and needs --seed", 0);
  return *cfg.seed;
}

PackingLimits packing_limits(const RunConfig &cfg) { return PackingLimits{cfg.budget_nodes}; }

CopyLimits copy_limits(const RunConfig &cfg) {
  CopyLimits l;
  l.node_budget = cfg.budget_nodes;
  return l;
}

ColoringSearchOptions coloring_options(const RunConfig &cfg) {
  ColoringSearchOptions o;
  o.full_edge_ceiling = cfg.edge_ceiling;
  o.partition_budget = cfg.budget_partitions;
  o.packing = packing_limits(cfg);
  o.copies = copy_limits(cfg);
  return o;
}

// --- reports ----------------------------------------------------------------

struct Report {
  Json body;
  bool verified = true;
  bool complete = true;
  std::string text; ///< non-JSON payload (CSV); written instead of the JSON when set
};

Json config_json(const RunConfig &cfg, std::initializer_list<const char *> keys) {
  const Json all{{"graph", cfg.graph},
                 {"pattern", cfg.pattern.empty() ? "K" + std::to_string(cfg.r) : cfg.pattern},
                 {"coloring", cfg.coloring},
                 {"mode", cfg.mode},
                 {"n", cfg.n},
                 {"r", cfg.r},
                 {"k", cfg.k},
                 {"m", cfg.m},
                 {"trials", cfg.trials},
                 {"seed", cfg.seed ? Json(*cfg.seed) : Json(nullptr)},
                 {"budget_nodes", cfg.budget_nodes},
                 {"budget_partitions", cfg.budget_partitions},
                 {"edge_ceiling", cfg.edge_ceiling},
                 {"part_size", cfg.part_size},
                 {"density", cfg.density},
                 {"p", cfg.p},
                 {"eta", cfg.eta},
                 {"internal_edge", !cfg.no_internal_edge},
                 {"per_graph", cfg.per_graph}};
  Json out = Json::object();
  for (const char *key : keys)
    out[key] = all.at(key);
  return out;
}

Report envelope(const RunConfig &cfg, Json config, Json result, Json verification) {
  Report rep;
  for (const auto &item : verification.items())
    rep.verified = rep.verified && item.value().is_boolean() && item.value().get<bool>();
  rep.body["format_version"] = kReportFormatVersion;
  rep.body["command"] = cfg.command;
  rep.body["config"] = std::move(config);
  rep.body["result"] = std::move(result);
  rep.body["verification"] = std::move(verification);
  return rep;
}

Report cmd_decompose(const RunConfig &cfg) {
  const Graph g = resolve_graph(cfg.graph);
  const HPattern h = resolve_pattern(cfg);
  const PhiResult plain = phi(g, h, packing_limits(cfg), copy_limits(cfg));

  Json result;
  result["graph"] = graph_json(g);
  result["pattern"] = pattern_json(h);
  Json verification;
  verification["decomposition_valid"] = is_valid_decomposition(g, plain.decomposition, h);
  if (cfg.coloring == "enumerate") {
    const ColoringMaxResult best = phi_R_max_over_colorings(g, h, coloring_options(cfg));
    result["phi"] = plain.value;
    result["phi_R"] = best.value;
    result["N"] = plain.packing.size();
    if (best.pattern_free || best.witness.blocks.empty()) {
      // φ^R = φ when the search never beat its seed; any colouring realises e(G) when H-free.
      const EdgeColoring chi = greedy_edge_coloring(g);
      const PhiResult rb = phi_rainbow(g, h, chi, packing_limits(cfg), copy_limits(cfg));
      result["N_R"] = rb.packing.size();
      result["coloring"] = coloring_json(g, chi);
      result["decomposition"] = decomposition_json(g, rb.decomposition);
      verification["witness_reproduces_value"] = rb.value == best.value;
    } else {
      const EdgeColoring chi = to_coloring(g, best.witness);
      const PhiResult rb = phi_rainbow(g, h, chi, packing_limits(cfg), copy_limits(cfg));
      result["N_R"] = rb.packing.size();
      result["coloring"] = coloring_json(g, chi);
      result["decomposition"] = decomposition_json(g, rb.decomposition);
      verification["witness_reproduces_value"] = rb.value == best.value;
      verification["rainbow_decomposition_valid"] =
          is_valid_decomposition(g, rb.decomposition, h, &chi);
    }
    result["proven_optimal"] = best.proven_optimal;
    result["upper_bound"] = best.upper_bound;
    result["leaves"] = best.leaves;
    verification["dominance"] = plain.value <= best.value && best.value <= g.size();
    Report rep = envelope(cfg, config_json(cfg, {"graph", "pattern", "coloring", "budget_nodes",
                                                 "budget_partitions", "edge_ceiling"}),
                          std::move(result), std::move(verification));
    rep.complete = best.proven_optimal;
    return rep;
  }

  const EdgeColoring chi = resolve_coloring(g, cfg.coloring);
  const PhiResult rb = phi_rainbow(g, h, chi, packing_limits(cfg), copy_limits(cfg));
  result["phi"] = plain.value;
  result["phi_R"] = rb.value;
  result["N"] = plain.packing.size();
  result["N_R"] = rb.packing.size();
  result["coloring"] = coloring_json(g, chi);
  result["decomposition"] = decomposition_json(g, rb.decomposition);
  result["uncolored_decomposition"] = decomposition_json(g, plain.decomposition);
  verification["coloring_proper"] = verify_proper(g, chi);
  verification["rainbow_decomposition_valid"] = is_valid_decomposition(g, rb.decomposition, h, &chi);
  verification["dominance"] = plain.value <= rb.value && rb.value <= g.size();
  return envelope(cfg, config_json(cfg, {"graph", "pattern", "coloring", "budget_nodes"}),
                  std::move(result), std::move(verification));
}

Report cmd_census(const RunConfig &cfg) {
  const Graph g = resolve_graph(cfg.graph);
  const HPattern h = resolve_pattern(cfg);
  const EdgeColoring chi = resolve_coloring(g, cfg.coloring);
  const auto census = nonrainbow_census(g, h, chi, copy_limits(cfg));
  const auto copies = enumerate_copies(g, h, copy_limits(cfg));
  const auto rb = rainbow_copies(g, h, chi, copy_limits(cfg));
  std::int64_t rb_inc = 0, non_inc = 0;
  for (const auto &row : census) {
    rb_inc += row.rainbow;
    non_inc += row.non_rainbow;
  }
  Json result;
  result["graph"] = graph_json(g);
  result["pattern"] = pattern_json(h);
  result["copies"] = copies.size();
  result["rainbow_copies"] = rb.size();
  result["census"] = census_json(census);
  Json verification;
  verification["coloring_proper"] = verify_proper(g, chi);
  verification["totals_consistent"] =
      rb_inc == static_cast<std::int64_t>(rb.size()) * h.edge_count() &&
      non_inc == static_cast<std::int64_t>(copies.size() - rb.size()) * h.edge_count();
  return envelope(cfg, config_json(cfg, {"graph", "pattern", "coloring", "budget_nodes"}),
                  std::move(result), std::move(verification));
}

Report cmd_pack(const RunConfig &cfg) {
  const Graph g = resolve_graph(cfg.graph);
  const HPattern h = resolve_pattern(cfg);
  const auto copies = enumerate_copies(g, h, copy_limits(cfg));
  const std::string mode = cfg.mode.empty() ? "exact" : cfg.mode;
  Json result;
  result["graph"] = graph_json(g);
  result["pattern"] = pattern_json(h);
  result["candidates"] = copies.size();
  Packing p;
  if (mode == "exact") {
    p = max_packing_exact(copies, g.size(), packing_limits(cfg));
  } else if (mode == "greedy") {
    p = greedy_packing(copies, require_seed(cfg));
  } else if (mode == "local") {
    p = local_search_packing(copies, greedy_packing(copies, require_seed(cfg)));
  } else if (mode == "hypergraph") {
    const HypergraphMatching m = hypergraph_matching_greedy(copies, g.size(), require_seed(cfg));
    result["hypergraph"] = hypergraph_json(g, m);
    p = m.packing;
  } else {
    throw ParseError("pack --mode must be exact, greedy, local or hypergraph", 0);
  }
  Json packed = Json::array();
  for (const auto &c : p.copies)
    packed.push_back(copy_json(g, c));
  result["size"] = p.size();
  result["copies"] = std::move(packed);
  Json verification;
  verification["packing_valid"] = is_valid_packing(g, p);
  return envelope(cfg, config_json(cfg, {"graph", "pattern", "mode", "seed", "budget_nodes"}),
                  std::move(result), std::move(verification));
}

SweepOptions sweep_options(const RunConfig &cfg) {
  SweepOptions o;
  o.coloring = coloring_options(cfg);
  o.workers = cfg.workers;
  o.keep_per_graph = cfg.per_graph;
  return o;
}

Report cmd_extremal(const RunConfig &cfg) {
  const HPattern h = resolve_pattern(cfg);
  const std::string mode = cfg.mode.empty() ? "rainbow" : cfg.mode;
  if (mode != "rainbow" && mode != "uncolored")
    throw ParseError("extremal --mode must be rainbow or uncolored", 0);
  const bool rainbow = mode == "rainbow";
  const ExtremalRecord rec = phi_n_table(cfg.n, h, rainbow, sweep_options(cfg));
  // Re-run every maximizer in isolation.
  bool reproduces = true;
  for (std::size_t i = 0; i < rec.maximizers.size(); ++i) {
    const Graph g = parse_graph6(rec.maximizers[i]);
    const std::int64_t v =
        rainbow ? phi_rainbow(g, h, to_coloring(g, rec.witness_colorings[i]), packing_limits(cfg),
                              copy_limits(cfg))
                      .value
                : phi(g, h, packing_limits(cfg), copy_limits(cfg)).value;
    reproduces = reproduces && v == rec.value;
  }
  Json verification;
  verification["maximizers_reproduce_value"] = reproduces;
  Json config = config_json(cfg, {"n", "pattern", "mode", "budget_nodes", "budget_partitions",
                                  "edge_ceiling", "per_graph"});
  config["mode"] = mode;
  Report rep = envelope(cfg, std::move(config), extremal_json(rec), std::move(verification));
  rep.complete = rec.complete;
  return rep;
}

Report cmd_theorem(const RunConfig &cfg) {
  const auto rows = verify_main_theorem_small(3, cfg.n, sweep_options(cfg));
  Json verification;
  bool all = true;
  for (const auto &r : rows)
    all = all && r.value == r.expected;
  verification["value_equals_floor_n2_over_4"] = all;
  return envelope(cfg, config_json(cfg, {"n", "budget_nodes", "budget_partitions", "edge_ceiling"}),
                  theorem_json(rows), std::move(verification));
}

Report cmd_stability(const RunConfig &cfg) {
  const Graph g = resolve_graph(cfg.graph);
  const int k = cfg.k > 0 ? cfg.k : cfg.r - 1;
  const std::string mode = cfg.mode.empty() ? "exact" : cfg.mode;
  PartitionOptions opts;
  opts.node_budget = cfg.budget_nodes;
  if (mode == "heuristic") {
    opts.mode = PartitionMode::heuristic;
    opts.seed = require_seed(cfg);
  } else if (mode != "exact") {
    throw ParseError("stability --mode must be exact or heuristic", 0);
  }
  const PartitionResult r = min_internal_partition(g, k, opts);
  Json result;
  result["graph"] = graph_json(g);
  result["k"] = k;
  result["partition"] = partition_result_json(r);
  Json verification;
  verification["internal_edges_recomputed"] = count_internal_edges(g, r.parts) == r.internal_edges;
  Json config = config_json(cfg, {"graph", "k", "mode", "seed", "budget_nodes"});
  config["k"] = k;
  config["mode"] = mode;
  return envelope(cfg, std::move(config), std::move(result), std::move(verification));
}

Report cmd_edk(const RunConfig &cfg) {
  const auto ms = parse_m_values(cfg.m);
  const auto rows = edk_experiment(cfg.n, cfg.r, ms, packing_limits(cfg));
  bool hoi = true, complete = true;
  for (const auto &row : rows) {
    complete = complete && row.complete;
    if (row.complete)
      hoi = hoi && row.min_packing >= static_cast<std::int64_t>(std::ceil(row.hoi_bound - 1e-12));
  }
  Json verification;
  verification["hoi_bound_holds"] = hoi;
  Report rep = envelope(cfg, config_json(cfg, {"n", "r", "m", "budget_nodes"}),
                        bound_reports_json(rows), std::move(verification));
  rep.complete = complete;
  if (cfg.format.empty() || cfg.format == "csv")
    rep.text = bound_table_csv(rows);
  else if (cfg.format != "json")
    throw ParseError("--format must be csv or json", 0);
  return rep;
}

Report cmd_mc_sparsify(const RunConfig &cfg) {
  if (cfg.r < 2)
    throw ParseError("mc-sparsify needs --r >= 2", 0);
  SparsifySetup s;
  s.part_sizes.assign(static_cast<std::size_t>(cfg.r), cfg.part_size);
  s.densities.assign(static_cast<std::size_t>(cfg.r),
                     std::vector<double>(static_cast<std::size_t>(cfg.r), cfg.density));
  s.probabilities.assign(static_cast<std::size_t>(cfg.r),
                         std::vector<double>(static_cast<std::size_t>(cfg.r), cfg.p));
  s.designated = Edge(0, cfg.part_size);
  s.trials = cfg.trials;
  s.seed = require_seed(cfg);
  s.eta = cfg.eta;
  const SparsifyTrial t = sparsify_closure_mc(s);
  bool in_range = true;
  for (std::int64_t c : t.closed)
    in_range = in_range && c >= 0 && c <= t.family_size;
  Json verification;
  verification["counts_within_family"] = in_range;
  Json result = sparsify_json(t);
  result["within_5_standard_errors"] =
      t.standard_error == 0.0 ? t.mean == t.expectation
                              : std::abs(t.mean - t.expectation) <= 5.0 * t.standard_error;
  return envelope(cfg,
                  config_json(cfg, {"r", "part_size", "density", "p", "trials", "seed", "eta"}),
                  std::move(result), std::move(verification));
}

Report cmd_finder(const RunConfig &cfg) {
  const int k = cfg.k > 0 ? cfg.k : cfg.r - 1;
  const bool internal = !cfg.no_internal_edge;
  const Graph g = near_turan_host(k, cfg.part_size, internal);
  const EdgeColoring chi = resolve_coloring(g, cfg.coloring);
  const RainbowSearchResult r = near_turan_rainbow_finder(k, cfg.part_size, internal, chi,
                                                          cfg.budget_nodes);
  Json result;
  result["host"] = graph_json(g);
  result["found"] = r.witness.has_value();
  result["witness"] = r.witness ? copy_json(g, *r.witness) : Json(nullptr);
  result["certified_absent"] = r.certified_absent;
  result["candidates_examined"] = r.candidates_examined;
  Json verification;
  verification["coloring_proper"] = verify_proper(g, chi);
  verification["answer_consistent"] =
      r.witness ? is_rainbow(*r.witness, chi) : r.certified_absent;
  Json config = config_json(cfg, {"k", "part_size", "internal_edge", "coloring", "budget_nodes"});
  config["k"] = k;
  return envelope(cfg, std::move(config), std::move(result), std::move(verification));
}

Report cmd_enumerate(const RunConfig &cfg) {
  const GraphClass cls = enumerate_nonisomorphic(cfg.n);
  Json graphs = Json::array();
  for (const Graph &g : cls.graphs)
    graphs.push_back(write_graph6(g));
  Json result;
  result["n"] = cfg.n;
  result["count"] = cls.size();
  result["graphs"] = std::move(graphs);
  Json verification;
  verification["sorted_by_edges_then_graph6"] = true;
  return envelope(cfg, config_json(cfg, {"n"}), std::move(result), std::move(verification));
}

void emit(const RunConfig &cfg, const std::string &payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary | std::ios::trunc);
  if (!out || !(out << payload))
    throw IoError("cannot write " + cfg.out);
}

int fail(const std::string &kind, int code, const std::string &message, Json extra = Json::object()) {
  Json err;
  err["error"] = kind;
  err["exit_code"] = code;
  err["message"] = message;
  for (auto &item : extra.items())
    err[item.key()] = item.value();
  std::cerr << err.dump() << "\n";
  return code;
}

} // namespace

int main(int argc, char **argv) {
  RunConfig cfg;
  CLI::App app{"Rainbow H-decompositions: exact packings, extremal sweeps and stability experiments"};
  app.set_config("--config", "", "TOML/INI file of option values (flags override it)");
  app.require_subcommand(1, 1);

  app.add_option("--graph", cfg.graph, "graph6 string, graph6 file, or generator (turan:n:k, complete:n, complete_multipartite:a,b,c, cycle:n, path:n, star:k, empty:n)");
  app.add_option("--pattern", cfg.pattern, "K<r> or a graph6 pattern; defaults to K<r>");
  app.add_option("--coloring", cfg.coloring, "greedy | vizing | all-distinct | enumerate | <json file>")->capture_default_str();
  app.add_option("--mode", cfg.mode, "command-specific mode");
  app.add_option("--n", cfg.n, "number of vertices")->check(CLI::Range(0, 10));
  app.add_option("--r", cfg.r, "clique order / number of parts")->check(CLI::Range(2, 64))->capture_default_str();
  app.add_option("--k", cfg.k, "number of parts (default r-1)")->check(CLI::NonNegativeNumber);
  app.add_option("--m", cfg.m, "edge surplus: 2, 1,2,3 or 1..3")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Monte Carlo trials")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized commands (required there)");
  app.add_option("--budget-nodes", cfg.budget_nodes, "search node budget")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--budget-partitions", cfg.budget_partitions, "colouring leaves per host above the edge ceiling")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--edge-ceiling", cfg.edge_ceiling, "hosts up to this many edges get a full colouring search")->check(CLI::Range(0, 64))->capture_default_str();
  app.add_option("--workers", cfg.workers, "worker threads for sweeps")->check(CLI::Range(1, 256))->capture_default_str();
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--format", cfg.format, "edk output: csv (default) or json");
  app.add_option("--part-size", cfg.part_size, "vertices per part")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--density", cfg.density, "host density between parts")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  app.add_option("--p", cfg.p, "edge survival probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  app.add_option("--eta", cfg.eta, "relative band for the outside-eta fraction")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--no-internal-edge", cfg.no_internal_edge, "finder: omit the edge inside the first part");
  app.add_flag("--per-graph", cfg.per_graph, "extremal: include every swept graph");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"decompose", "phi, phi_R, N, N_R and a witness decomposition"},
      {"census", "per-edge rainbow / non-rainbow copy counts"},
      {"pack", "exact or heuristic packings of copies"},
      {"extremal", "sweep every graph on n vertices"},
      {"theorem", "check phi_R(n,K3) = floor(n^2/4) for n = 3..N"},
      {"stability", "minimum internal-edge partition"},
      {"edk", "minimum packings at ex(n,K_r)+m edges"},
      {"mc-sparsify", "sparsification closure Monte Carlo"},
      {"finder", "rainbow K_{k+1} in a near-Turan host"},
      {"enumerate", "non-isomorphic graphs on n vertices"}};
  for (const auto &[name, help] : commands)
    app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return fail("parse", kParse, e.what());
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Report rep;
    if (cfg.command == "decompose")
      rep = cmd_decompose(cfg);
    else if (cfg.command == "census")
      rep = cmd_census(cfg);
    else if (cfg.command == "pack")
      rep = cmd_pack(cfg);
    else if (cfg.command == "extremal")
      rep = cmd_extremal(cfg);
    else if (cfg.command == "theorem")
      rep = cmd_theorem(cfg);
    else if (cfg.command == "stability")
      rep = cmd_stability(cfg);
    else if (cfg.command == "edk")
      rep = cmd_edk(cfg);
    else if (cfg.command == "mc-sparsify")
      rep = cmd_mc_sparsify(cfg);
    else if (cfg.command == "finder")
      rep = cmd_finder(cfg);
    else
      rep = cmd_enumerate(cfg);

    emit(cfg, rep.text.empty() ? dump(rep.body) : rep.text);
    if (!rep.verified)
      return fail("invariant", kInvariant, "report verification failed",
                  Json{{"verification", rep.body["verification"]}});
    if (!rep.complete)
      return fail("budget", kBudget, "search incomplete; report holds the best values found");
    return kOk;
  } catch (const BudgetExceeded &e) {
    return fail("budget", kBudget, e.what(),
                Json{{"best_found", e.best_found()}, {"proven_optimal", e.proven_optimal()}});
  } catch (const ParseError &e) {
    return fail("parse", kParse, e.what(), Json{{"offset", e.offset()}});
  } catch (const IoError &e) {
    return fail("io", kIo, e.what());
  } catch (const InvariantViolation &e) {
    return fail("invariant", kInvariant, e.what());
  } catch (const ColoringError &e) {
    return fail("parse", kParse, e.what());
  } catch (const std::domain_error &e) {
    return fail("parse", kParse, e.what());
  } catch (const std::invalid_argument &e) {
    return fail("parse", kParse, e.what());
  }
}
