#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/copies.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/packing.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rainbow {

struct ColoringSearchOptions {
  /// Hosts with at most this many edges are searched without a leaf cap.
  int full_edge_ceiling = 12;
  /// Leaf (complete partition) cap for hosts above the ceiling.
  std::uint64_t partition_budget = 200'000;
  /// Throw BudgetExceeded instead of returning an unproven result.
  bool strict = false;
  PackingLimits packing;
  CopyLimits copies;
};

/// max over proper colourings χ of φ^R_χ(G,H).
struct ColoringMaxResult {
  std::int64_t value = 0;
  MatchingPartition witness;   ///< a colouring attaining `value`
  bool proven_optimal = false;
  std::int64_t upper_bound = 0; ///< e(G) - (e(H)-1)·ν(always-rainbow copies)
  std::uint64_t leaves = 0;     ///< complete partitions evaluated
  std::uint64_t memo_hits = 0;
  bool pattern_free = false;    ///< G has no copy of H
};

/// Searches matching partitions in restricted-growth order with these cuts:
///  - H-free hosts return e(G) at once;
///  - the value can never exceed e(G) - (e(H)-1)·ν(F) where F are the copies
///    rainbow under every colouring, so the search stops once it is reached;
///  - a subtree is cut when the copies already fully coloured and rainbow
///    admit a packing that keeps every completion at or below the incumbent;
///  - leaves sharing a rainbow-copy set reuse the memoised packing value.
ColoringMaxResult phi_R_max_over_colorings(const Graph &g, const HPattern &h,
                                           const ColoringSearchOptions &options = {});

struct SweepEntry {
  std::string graph6;
  int edges = 0;
  std::int64_t phi = 0;
  std::int64_t phi_R_max = 0; ///< rainbow sweeps only
  bool complete = true;
};

struct ExtremalRecord {
  int n = 0;
  std::string pattern;
  bool rainbow = false;
  std::int64_t value = 0;
  std::vector<std::string> maximizers;                ///< canonical graph6
  std::vector<MatchingPartition> witness_colorings;   ///< rainbow: one per maximizer
  std::int64_t reference = 0;                         ///< ex(n, H)
  bool exceeds_reference = false;
  bool turan_is_maximizer = false;
  bool turan_unique_maximizer = false;
  bool complete = true;
  std::size_t graphs_swept = 0;
  std::vector<SweepEntry> per_graph;                  ///< filled when requested
};

struct SweepOptions {
  ColoringSearchOptions coloring;
  int workers = 1;
  int enumeration_ceiling = kDefaultEnumerationCeiling;
  bool keep_per_graph = false;
};

/// Sweeps every graph on n vertices. Uncoloured mode maximises φ(G,H);
/// rainbow mode maximises max_χ φ^R_χ(G,H). The reference is ex(n,K_r) for
/// H = K_r (cross-checked against the sweep) and the largest H-free graph in
/// the sweep otherwise. Turán comparisons use T_{χ(H)-1}(n).
ExtremalRecord phi_n_table(int n, const HPattern &h, bool rainbow,
                           const SweepOptions &options = {});

struct TheoremRow {
  int n = 0;
  std::int64_t value = 0;
  std::int64_t expected = 0;
  bool turan_unique_maximizer = false;
  std::vector<std::string> maximizers;
};

/// φ^R(n,K_3) = ⌊n²/4⌋ for n in [n_min, n_max]; InvariantViolation otherwise.
/// Uniqueness of T_2(n) is reported, never asserted.
std::vector<TheoremRow> verify_main_theorem_small(int n_min, int n_max,
                                                  const SweepOptions &options = {});

} // namespace rainbow
