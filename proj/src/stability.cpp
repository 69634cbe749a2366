#include "rainbow/stability.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rainbow {

// --- minimum internal-edge partitions ---------------------------------------

std::int64_t count_internal_edges(const Graph &g, const std::vector<std::vector<Vertex>> &parts) {
  std::vector<int> part_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (Vertex v : parts[p]) {
      if (v < 0 || v >= g.order() || part_of[static_cast<std::size_t>(v)] != -1)
        throw std::invalid_argument("parts do not partition the vertex set");
      part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
  if (std::find(part_of.begin(), part_of.end(), -1) != part_of.end())
    throw std::invalid_argument("parts do not cover the vertex set");
  std::int64_t internal = 0;
  for (const Edge &e : g.edges())
    internal += part_of[static_cast<std::size_t>(e.u)] == part_of[static_cast<std::size_t>(e.v)];
  return internal;
}

namespace {

std::vector<std::vector<Vertex>> parts_from(const std::vector<int> &assignment, int k) {
  std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < assignment.size(); ++v)
    parts[static_cast<std::size_t>(assignment[v])].push_back(static_cast<Vertex>(v));
  return parts;
}

PartitionResult local_search_partition(const Graph &g, int k, const PartitionOptions &opt) {
  const int n = g.order();
  std::vector<int> best_assign(static_cast<std::size_t>(n), 0);
  std::int64_t best = -1;
  for (int start = 0; start < std::max(1, opt.restarts); ++start) {
    Rng rng = make_stream(opt.seed, static_cast<std::uint64_t>(start));
    std::vector<int> part(static_cast<std::size_t>(n));
    for (auto &p : part)
      p = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(k)));
    for (bool moved = true; moved;) {
      moved = false;
      for (Vertex v = 0; v < n; ++v) {
        std::vector<int> inside(static_cast<std::size_t>(k), 0);
        for (Vertex w = 0; w < n; ++w)
          if (g.adjacent(v, w))
            ++inside[static_cast<std::size_t>(part[static_cast<std::size_t>(w)])];
        const int here = part[static_cast<std::size_t>(v)];
        const auto target = static_cast<int>(
            std::min_element(inside.begin(), inside.end()) - inside.begin());
        if (inside[static_cast<std::size_t>(target)] < inside[static_cast<std::size_t>(here)]) {
          part[static_cast<std::size_t>(v)] = target;
          moved = true;
        }
      }
    }
    std::int64_t internal = 0;
    for (const Edge &e : g.edges())
      internal += part[static_cast<std::size_t>(e.u)] == part[static_cast<std::size_t>(e.v)];
    if (best < 0 || internal < best) {
      best = internal;
      best_assign = part;
    }
  }
  PartitionResult r;
  r.parts = parts_from(best_assign, k);
  r.internal_edges = std::max<std::int64_t>(best, 0);
  r.optimal = false;
  return r;
}

class PartitionSearch {
public:
  PartitionSearch(const Graph &g, int k, std::uint64_t budget, std::int64_t incumbent,
                  std::vector<int> incumbent_assign)
      : g_(g), k_(k), n_(g.order()), budget_(budget), best_(incumbent),
        best_assign_(std::move(incumbent_assign)) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    part_.assign(static_cast<std::size_t>(n_), -1);
    seen_.assign(static_cast<std::size_t>(n_ * k_), 0);
  }

  void run() { search(0, 0, -1); }
  std::int64_t best() const { return best_; }
  const std::vector<int> &best_assignment() const { return best_assign_; }

private:
  int &seen(Vertex v, int p) { return seen_[static_cast<std::size_t>(v * k_ + p)]; }

  std::int64_t lower_bound(std::size_t depth) {
    std::int64_t lb = 0;
    for (std::size_t i = depth; i < order_.size(); ++i) {
      int low = INT32_MAX;
      for (int p = 0; p < k_; ++p)
        low = std::min(low, seen(order_[i], p));
      lb += low;
    }
    return lb;
  }

  void place(Vertex v, int p, int dir) {
    for (Vertex w = 0; w < n_; ++w)
      if (g_.adjacent(v, w))
        seen(w, p) += dir;
  }

  void search(std::size_t depth, std::int64_t cur, int max_used) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("partition search node budget exhausted", best_);
    if (cur + lower_bound(depth) >= best_)
      return;
    if (depth == order_.size()) {
      best_ = cur;
      best_assign_ = part_;
      return;
    }
    const Vertex v = order_[depth];
    // Parts are interchangeable: the first vertex in a new part opens it.
    for (int p = 0; p < k_ && p <= max_used + 1; ++p) {
      part_[static_cast<std::size_t>(v)] = p;
      place(v, p, +1);
      search(depth + 1, cur + seen(v, p), std::max(max_used, p));
      place(v, p, -1);
      part_[static_cast<std::size_t>(v)] = -1;
    }
  }

  const Graph &g_;
  int k_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::int64_t best_;
  std::vector<int> best_assign_;
  std::vector<Vertex> order_;
  std::vector<int> part_;
  std::vector<int> seen_; // assigned neighbours of v in part p
};

} // namespace

PartitionResult min_internal_partition(const Graph &g, int k, const PartitionOptions &options) {
  if (k <= 0)
    throw std::invalid_argument("partition needs at least one part");
  PartitionResult heuristic = local_search_partition(g, k, options);
  if (options.mode == PartitionMode::heuristic)
    return heuristic;
  if (g.order() > kExactPartitionMaxOrder)
    throw std::invalid_argument("exact partition mode supports at most " +
                                std::to_string(kExactPartitionMaxOrder) + " vertices");

  std::vector<int> assign(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t p = 0; p < heuristic.parts.size(); ++p)
    for (Vertex v : heuristic.parts[p])
      assign[static_cast<std::size_t>(v)] = static_cast<int>(p);
  // Incumbent + 1 so the search itself records an optimal assignment.
  PartitionSearch search(g, k, options.node_budget, heuristic.internal_edges + 1, assign);
  search.run();
  PartitionResult r;
  r.parts = parts_from(search.best_assignment(), k);
  r.internal_edges = search.best();
  r.optimal = true;
  if (count_internal_edges(g, r.parts) != r.internal_edges)
    throw InvariantViolation("partition search miscounted internal edges");
  return r;
}

// --- edk(m) -----------------------------------------------------------------

std::vector<BoundReport> edk_experiment(int n, int r, std::span<const std::int64_t> m_values,
                                        const PackingLimits &limits) {
  if (r < 3)
    throw std::domain_error("edk needs r >= 3");
  const std::int64_t ex = turan_number(n, r);
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  for (std::int64_t m : m_values)
    if (m < 0 || ex + m > max_edges)
      throw std::domain_error("edk: ex(n,K_r)+m = " + std::to_string(ex + m) +
                              " is not a feasible edge count on " + std::to_string(n) +
                              " vertices");

  const GraphClass cls = enumerate_nonisomorphic(n);
  const HPattern clique = HPattern::clique(r);
  const std::int64_t denom = static_cast<std::int64_t>(r) * (r - 1) / 2 - (r - 2);

  std::vector<BoundReport> rows;
  for (std::int64_t m : m_values) {
    BoundReport row;
    row.n = n;
    row.r = r;
    row.m = m;
    row.edges = ex + m;
    row.hoi_bound = static_cast<double>(m) / static_cast<double>(denom);
    if (r == 3)
      row.gyori_tuza_reference = 5.0 * static_cast<double>(m) / 9.0;
    row.min_packing = INT64_MAX;
    for (const Graph &g : cls.graphs) {
      if (g.size() != row.edges)
        continue;
      ++row.graphs;
      std::int64_t value = 0;
      try {
        value = N_value(g, clique, limits).size();
      } catch (const BudgetExceeded &ex_budget) {
        value = ex_budget.best_found();
        row.complete = false;
      }
      if (value < row.min_packing) {
        row.min_packing = value;
        row.witnesses.clear();
      }
      if (value == row.min_packing)
        row.witnesses.push_back(write_graph6(g));
    }
    if (row.graphs == 0)
      row.min_packing = 0;
    const std::int64_t hoi_ceil = (m + denom - 1) / denom;
    if (row.complete && row.min_packing < hoi_ceil)
      throw InvariantViolation("edk row n=" + std::to_string(n) + " r=" + std::to_string(r) +
                               " m=" + std::to_string(m) + " breaks the Hoi bound");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string bound_table_csv(std::span<const BoundReport> rows) {
  std::ostringstream out;
  out << "n,r,m,min_packing,hoi_bound,gt_reference\n";
  out << std::fixed << std::setprecision(6);
  for (const auto &row : rows) {
    out << row.n << ',' << row.r << ',' << row.m << ',' << row.min_packing << ','
        << row.hoi_bound << ',';
    if (row.gyori_tuza_reference)
      out << *row.gyori_tuza_reference;
    out << '\n';
  }
  return out.str();
}

// --- sparsification closure Monte Carlo --------------------------------------

namespace {

void extend_through(const Graph &g, const VertexSet &cand, std::size_t need,
                    std::vector<Vertex> &chosen, std::vector<std::vector<Vertex>> &out) {
  if (need == 0) {
    out.push_back(chosen);
    return;
  }
  for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
    VertexSet next = cand & g.neighbors(static_cast<Vertex>(v));
    for (auto w = next.find_first(); w != VertexSet::npos && w <= v; w = next.find_next(w))
      next.reset(w);
    chosen.push_back(static_cast<Vertex>(v));
    extend_through(g, next, need - 1, chosen, out);
    chosen.pop_back();
  }
}

void check_square(const std::vector<std::vector<double>> &m, std::size_t r, const char *what) {
  if (m.size() != r)
    throw std::invalid_argument(std::string(what) + " must be r x r");
  for (std::size_t i = 0; i < r; ++i) {
    if (m[i].size() != r)
      throw std::invalid_argument(std::string(what) + " must be r x r");
    for (std::size_t j = 0; j < r; ++j)
      if (m[i][j] < 0.0 || m[i][j] > 1.0 || m[i][j] != m[j][i])
        throw std::invalid_argument(std::string(what) + " entries must be symmetric in [0,1]");
  }
}

} // namespace

SparsifyTrial sparsify_closure_mc(const SparsifySetup &setup) {
  if (!setup.seed)
    throw std::invalid_argument("sparsify_closure_mc requires an explicit seed");
  const std::size_t r = setup.part_sizes.size();
  if (r < 2)
    throw std::invalid_argument("need at least two parts");
  check_square(setup.densities, r, "densities");
  check_square(setup.probabilities, r, "probabilities");
  if (setup.trials <= 0)
    throw std::invalid_argument("trials must be positive");

  std::vector<int> part_of;
  for (std::size_t p = 0; p < r; ++p) {
    if (setup.part_sizes[p] <= 0)
      throw std::invalid_argument("parts must be non-empty");
    part_of.insert(part_of.end(), static_cast<std::size_t>(setup.part_sizes[p]),
                   static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  const Edge designated(setup.designated.u, setup.designated.v);
  if (designated.u < 0 || designated.v >= n ||
      part_of[static_cast<std::size_t>(designated.u)] ==
          part_of[static_cast<std::size_t>(designated.v)])
    throw std::invalid_argument("designated edge must join two different parts");
  auto part = [&](Vertex v) { return static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)]); };

  Rng host_rng = make_stream(*setup.seed, 0);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (part(a) == part(b))
        continue;
      const bool keep = Edge(a, b) == designated || bernoulli(host_rng, setup.densities[part(a)][part(b)]);
      if (keep)
        edges.emplace_back(a, b);
    }
  const Graph host(n, edges);

  // Copies of K_r through the designated edge: the other r-2 vertices lie in
  // the common neighbourhood and form a clique.
  VertexSet common = host.neighbors(designated.u) & host.neighbors(designated.v);
  std::vector<std::vector<Vertex>> completions;
  std::vector<Vertex> chosen;
  extend_through(host, common, r - 2, chosen, completions);

  // Per copy, the host edges other than the designated one.
  std::vector<EdgeId> relevant;
  std::vector<std::vector<EdgeId>> copy_edges;
  for (const auto &rest : completions) {
    std::vector<Vertex> vs = rest;
    vs.push_back(designated.u);
    vs.push_back(designated.v);
    std::vector<EdgeId> ids;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (Edge(vs[i], vs[j]) != designated)
          ids.push_back(host.edge_id(vs[i], vs[j]));
    relevant.insert(relevant.end(), ids.begin(), ids.end());
    copy_edges.push_back(std::move(ids));
  }
  std::sort(relevant.begin(), relevant.end());
  relevant.erase(std::unique(relevant.begin(), relevant.end()), relevant.end());

  SparsifyTrial out;
  out.part_sizes = setup.part_sizes;
  out.densities = setup.densities;
  out.probabilities = setup.probabilities;
  out.designated = designated;
  out.family_size = static_cast<std::int64_t>(completions.size());
  out.eta = setup.eta;
  out.host_edges = host.size();

  double product = 1.0;
  const std::size_t du = part(designated.u), dv = part(designated.v);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      if (!((a == std::min(du, dv)) && (b == std::max(du, dv))))
        product *= setup.probabilities[a][b];
  out.expectation = static_cast<double>(out.family_size) * product;

  std::vector<char> kept(static_cast<std::size_t>(host.size()), 0);
  for (int t = 0; t < setup.trials; ++t) {
    Rng rng = make_stream(*setup.seed, static_cast<std::uint64_t>(t) + 1);
    for (EdgeId e : relevant) {
      const Edge &uv = host.edge(e);
      kept[static_cast<std::size_t>(e)] = bernoulli(rng, setup.probabilities[part(uv.u)][part(uv.v)]);
    }
    std::int64_t closed = 0;
    for (const auto &ids : copy_edges)
      closed += std::all_of(ids.begin(), ids.end(),
                            [&](EdgeId e) { return kept[static_cast<std::size_t>(e)] != 0; });
    out.closed.push_back(closed);
  }

  const double trials = static_cast<double>(setup.trials);
  double sum = 0.0;
  for (auto c : out.closed)
    sum += static_cast<double>(c);
  out.mean = sum / trials;
  double sq = 0.0;
  for (auto c : out.closed)
    sq += (static_cast<double>(c) - out.mean) * (static_cast<double>(c) - out.mean);
  out.variance = setup.trials > 1 ? sq / (trials - 1.0) : 0.0;
  out.standard_error = std::sqrt(out.variance / trials);
  out.z_score = out.standard_error > 0.0 ? (out.mean - out.expectation) / out.standard_error : 0.0;
  std::int64_t outside = 0;
  for (auto c : out.closed)
    outside += std::abs(static_cast<double>(c) - out.expectation) > setup.eta * out.expectation;
  out.outside_eta_fraction = static_cast<double>(outside) / trials;
  return out;
}

// --- rainbow K_{k+1} in near-Turán hosts ------------------------------------

Graph near_turan_host(int k, int part_size, bool internal_edge) {
  if (k < 1 || part_size < 1)
    throw std::invalid_argument("near-Turán host needs k >= 1 and non-empty parts");
  if (internal_edge && part_size < 2)
    throw std::invalid_argument("an internal edge needs a part of size at least 2");
  const std::vector<int> sizes(static_cast<std::size_t>(k), part_size);
  const Graph base = complete_multipartite(sizes);
  if (!internal_edge)
    return base;
  const Edge extra(0, 1);
  return base.with_edges(std::span<const Edge>(&extra, 1));
}

namespace {

bool rainbow_on(const Graph &g, const EdgeColoring &chi, const std::vector<Vertex> &vs) {
  std::vector<Color> colours;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const EdgeId e = g.edge_id(vs[i], vs[j]);
      if (e == kNoEdge)
        return false;
      colours.push_back(chi[e]);
    }
  std::sort(colours.begin(), colours.end());
  return std::adjacent_find(colours.begin(), colours.end()) == colours.end();
}

} // namespace

RainbowSearchResult near_turan_rainbow_finder(int k, int part_size, bool internal_edge,
                                              const EdgeColoring &chi, std::uint64_t budget) {
  const Graph host = near_turan_host(k, part_size, internal_edge);
  if (!verify_proper(host, chi))
    throw std::invalid_argument("near_turan_rainbow_finder requires a proper coloring");

  RainbowSearchResult result;
  if (!internal_edge) {
    // A k-partite host has no K_{k+1} at all.
    result.certified_absent = true;
    return result;
  }
  double space = 1.0;
  for (int p = 1; p < k; ++p)
    space *= part_size;
  if (space > static_cast<double>(budget))
    throw BudgetExceeded("rainbow finder search space exceeds budget", 0);

  // Pruned search: parts in increasing order, smallest labels first, colours
  // checked incrementally.
  std::vector<Vertex> chosen{0, 1};
  std::vector<Color> used{chi[host.edge_id(0, 1)]};
  std::function<bool(int)> dfs = [&](int p) -> bool {
    if (p == k)
      return true;
    for (int i = 0; i < part_size; ++i) {
      const Vertex v = p * part_size + i;
      ++result.candidates_examined;
      std::vector<Color> added;
      bool ok = true;
      for (Vertex w : chosen) {
        const Color c = chi[host.edge_id(v, w)];
        if (std::find(used.begin(), used.end(), c) != used.end() ||
            std::find(added.begin(), added.end(), c) != added.end()) {
          ok = false;
          break;
        }
        added.push_back(c);
      }
      if (!ok)
        continue;
      chosen.push_back(v);
      used.insert(used.end(), added.begin(), added.end());
      if (dfs(p + 1))
        return true;
      used.resize(used.size() - added.size());
      chosen.pop_back();
    }
    return false;
  };
  if (dfs(1)) {
    std::vector<EdgeId> ids;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        ids.push_back(host.edge_id(chosen[i], chosen[j]));
    result.witness = make_copy(host, std::move(ids));
    return result;
  }

  // Independent confirmation: every tuple, last part first, largest labels
  // first, full colour check without pruning.
  std::vector<int> digit(static_cast<std::size_t>(std::max(k - 1, 0)), part_size - 1);
  for (;;) {
    std::vector<Vertex> vs{0, 1};
    for (int p = k - 1; p >= 1; --p)
      vs.push_back(p * part_size + digit[static_cast<std::size_t>(p - 1)]);
    if (rainbow_on(host, chi, vs))
      throw InvariantViolation("rainbow finder missed a rainbow clique");
    std::size_t d = 0;
    while (d < digit.size() && digit[d] == 0)
      digit[d++] = part_size - 1;
    if (d == digit.size())
      break;
    --digit[d];
  }
  result.certified_absent = true;
  return result;
}

} // namespace rainbow
