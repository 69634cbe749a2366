#pragma once

#include "rainbow/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace rainbow {

using Color = int;
inline constexpr Color kUncolored = -1;

/// Colour per EdgeId of a host graph. Entries equal to kUncolored mark
/// missing assignments; verify_proper rejects them.
struct EdgeColoring {
  std::vector<Color> color_of;

  Color operator[](EdgeId e) const { return color_of[static_cast<std::size_t>(e)]; }
  std::size_t num_colors() const;

  friend bool operator==(const EdgeColoring &, const EdgeColoring &) = default;
};

/// Partition of E(G) into matchings, blocks ordered by their smallest EdgeId
/// and each block sorted. This is a proper colouring modulo colour renaming.
struct MatchingPartition {
  std::vector<std::vector<EdgeId>> blocks;

  friend bool operator==(const MatchingPartition &, const MatchingPartition &) = default;
};

/// Throws ColoringError when `chi` is not total on E(g).
bool verify_proper(const Graph &g, const EdgeColoring &chi);

/// Edge-by-edge first-fit in lexicographic edge order; at most 2Δ-1 colours.
EdgeColoring greedy_edge_coloring(const Graph &g);
/// Misra–Gries fan rotation; at most Δ+1 colours.
EdgeColoring vizing_coloring(const Graph &g);
/// Every edge its own colour.
EdgeColoring all_distinct_coloring(const Graph &g);

/// Colours the given edges 0..k-1 in order, then first-fit extends to the
/// remaining edges. The result is proper and the given edges are rainbow.
EdgeColoring rainbow_forcing_coloring(const Graph &g, std::span<const EdgeId> copy_edges);

MatchingPartition to_partition(const Graph &g, const EdgeColoring &chi);
/// Block i becomes colour i.
EdgeColoring to_coloring(const Graph &g, const MatchingPartition &p);
/// Blocks disjoint, covering E(g), each a matching, canonically ordered.
bool is_valid_partition(const Graph &g, const MatchingPartition &p);

inline constexpr int kDefaultPartitionEdgeCeiling = 15;

struct PartitionWalk {
  std::uint64_t emitted = 0;
  bool exhausted = true; ///< false when the budget or the visitor stopped the walk
};

/// Visits every matching partition of E(g) exactly once in restricted-growth
/// order (each edge tries existing blocks first, then opens a new block).
/// `visitor` returns false to stop. `budget` == 0 means unbounded, which is
/// only allowed for e(g) <= edge_ceiling (else BudgetExceeded).
PartitionWalk for_each_matching_partition(
    const Graph &g, const std::function<bool(const MatchingPartition &)> &visitor,
    std::uint64_t budget = 0, int edge_ceiling = kDefaultPartitionEdgeCeiling);

/// Collects the walk; throws BudgetExceeded (best_found = emitted count) if
/// the budget is hit before the walk is complete.
std::vector<MatchingPartition> enumerate_matching_partitions(
    const Graph &g, std::uint64_t budget = 0, int edge_ceiling = kDefaultPartitionEdgeCeiling);

} // namespace rainbow
