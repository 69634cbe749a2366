#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/copies.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/packing.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rainbow {

// --- minimum internal-edge partitions ---------------------------------------

struct PartitionResult {
  std::vector<std::vector<Vertex>> parts; ///< k parts, possibly empty
  std::int64_t internal_edges = 0;         ///< Σ e(V_i)
  bool optimal = false;
};

std::int64_t count_internal_edges(const Graph &g, const std::vector<std::vector<Vertex>> &parts);

enum class PartitionMode { exact, heuristic };

struct PartitionOptions {
  PartitionMode mode = PartitionMode::exact;
  std::uint64_t node_budget = 50'000'000;
  /// Heuristic mode: restarts and seed.
  int restarts = 32;
  std::uint64_t seed = 1;
};

inline constexpr int kExactPartitionMaxOrder = 16;

/// Splits V(G) into k parts minimising the edges inside parts. Exact mode
/// (n <= 16) is branch and bound over vertex assignments; heuristic mode is
/// multi-start single-vertex moves.
PartitionResult min_internal_partition(const Graph &g, int k, const PartitionOptions &options = {});

// --- edk(m) -----------------------------------------------------------------

struct BoundReport {
  int n = 0;
  int r = 0;
  std::int64_t m = 0;                 ///< surplus over ex(n,K_r)
  std::int64_t edges = 0;             ///< ex(n,K_r) + m
  std::int64_t min_packing = 0;       ///< min N(G,K_r) over such graphs
  double hoi_bound = 0.0;             ///< m / (C(r,2) - (r-2))
  std::optional<double> gyori_tuza_reference; ///< 5m/9, r = 3 only, never asserted
  std::vector<std::string> witnesses; ///< minimisers, canonical graph6
  std::size_t graphs = 0;
  bool complete = true;
};

/// Sweeps all graphs on n vertices with ex(n,K_r)+m edges for each m.
/// Throws std::domain_error for infeasible m and InvariantViolation if a
/// completed row breaks the Hoi bound.
std::vector<BoundReport> edk_experiment(int n, int r, std::span<const std::int64_t> m_values,
                                        const PackingLimits &limits = {});

/// n,r,m,min_packing,hoi_bound,gt_reference
std::string bound_table_csv(std::span<const BoundReport> rows);

// --- sparsification closure Monte Carlo --------------------------------------

struct SparsifySetup {
  std::vector<int> part_sizes;                 ///< r parts
  std::vector<std::vector<double>> densities;  ///< r x r, symmetric, host fill
  std::vector<std::vector<double>> probabilities; ///< r x r, survival p_kl
  Edge designated;                             ///< cross-part edge, forced into the host
  int trials = 0;
  std::optional<std::uint64_t> seed;           ///< required
  double eta = 0.1;
};

struct SparsifyTrial {
  std::vector<int> part_sizes;
  std::vector<std::vector<double>> densities;
  std::vector<std::vector<double>> probabilities;
  Edge designated;
  std::int64_t family_size = 0;                ///< |𝒦|, copies of K_r through the edge
  std::vector<std::int64_t> closed;            ///< per trial
  double mean = 0.0;
  double variance = 0.0;                       ///< unbiased sample variance
  double standard_error = 0.0;
  double expectation = 0.0;                    ///< |𝒦| ∏ p_kl over pairs other than the edge's
  double z_score = 0.0;                        ///< 0 when the standard error vanishes
  double eta = 0.1;
  double outside_eta_fraction = 0.0;           ///< trials outside (1±η)·expectation
  std::int64_t host_edges = 0;
};

/// Builds a random r-partite host, then runs independent sparsifications
/// keeping each host edge between parts k and l with probability p_kl and
/// counts the copies of 𝒦 closed by the designated edge. Trial t draws from
/// its own substream of the seed.
SparsifyTrial sparsify_closure_mc(const SparsifySetup &setup);

// --- rainbow K_{k+1} in near-Turán hosts ------------------------------------

/// Complete k-partite graph with equal parts (labels part by part) plus the
/// edge {0,1} inside the first part when `internal_edge` is set.
Graph near_turan_host(int k, int part_size, bool internal_edge);

struct RainbowSearchResult {
  std::optional<SubgraphCopy> witness;
  bool certified_absent = false; ///< absence confirmed by a second, independent scan
  std::uint64_t candidates_examined = 0;
};

/// Exhaustive search for a rainbow K_{k+1} through the internal edge of
/// near_turan_host(k, part_size, internal_edge) under `chi`.
RainbowSearchResult near_turan_rainbow_finder(int k, int part_size, bool internal_edge,
                                              const EdgeColoring &chi,
                                              std::uint64_t budget = 50'000'000);

} // namespace rainbow
