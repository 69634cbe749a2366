#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/copies.hpp"
#include "rainbow/graph.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace rainbow {

enum class PackingMode { unrestricted, rainbow };

const char *to_string(PackingMode mode);

/// Pairwise edge-disjoint copies. `chosen` indexes the candidate list the
/// packing was drawn from and is sorted ascending, as is `copies`.
struct Packing {
  std::vector<SubgraphCopy> copies;
  std::vector<std::size_t> chosen;
  PackingMode mode = PackingMode::unrestricted;

  std::int64_t size() const { return static_cast<std::int64_t>(copies.size()); }
};

/// Edge-disjointness, membership in E(g) and, if `chi` is given, rainbowness.
bool is_valid_packing(const Graph &g, const Packing &p, const EdgeColoring *chi = nullptr);

struct PackingLimits {
  std::uint64_t node_budget = 10'000'000;
};

using CandidateMask = boost::dynamic_bitset<>;

/// Exact maximum set packing over a fixed candidate family.
///
/// Branches on the uncovered element contained in the fewest live
/// candidates: either one of those candidates is taken, or the element is
/// declared uncovered. Nodes are bounded by
/// min(live elements / smallest set, greedy clique cover of the conflict
/// graph by shared elements). The reported witness is the lexicographically
/// smallest index set among all maximum packings, rebuilt from the optimum
/// by feasibility queries so it never depends on search order.
class SetPacker {
public:
  /// `sets[i]` lists element ids in [0, universe).
  SetPacker(std::size_t universe, std::span<const std::vector<int>> sets);

  std::size_t candidate_count() const { return m_; }

  /// Maximum packing size among `allowed` candidates (all when empty mask).
  /// Throws BudgetExceeded (best_found = incumbent) when nodes run out.
  std::int64_t maximum(const CandidateMask &allowed, const PackingLimits &limits = {});

  /// Lexicographically smallest maximum packing among `allowed`.
  std::vector<std::size_t> witness(const CandidateMask &allowed,
                                   const PackingLimits &limits = {});

  /// Nodes used by the last call.
  std::uint64_t nodes_used() const { return nodes_; }

private:
  using Words = std::vector<std::uint64_t>;

  struct Search;

  Words to_words(const CandidateMask &allowed) const;
  std::int64_t greedy_lower_bound(const Words &alive) const;
  std::int64_t bound(const Words &alive) const;
  void maximize(Search &s, const Words &alive, std::int64_t cur);
  bool feasible(Search &s, const Words &alive, std::int64_t need);

  std::size_t m_ = 0;
  std::size_t universe_ = 0;
  std::size_t cw_ = 0; // words per candidate mask
  std::size_t ew_ = 0; // words per element mask
  std::vector<Words> elems_of_;      // per candidate: element mask
  std::vector<Words> sets_with_;     // per element: candidate mask
  std::vector<Words> conflicts_;     // per candidate: candidates sharing an element (incl. self)
  std::vector<std::vector<int>> members_;
  std::size_t min_set_size_ = 1;
  std::uint64_t nodes_ = 0;
};

/// Maximum-cardinality packing of `candidates` (copies in a host with
/// `host_edges` edges).
Packing max_packing_exact(std::span<const SubgraphCopy> candidates, int host_edges,
                          const PackingLimits &limits = {});

/// N(G,H) with witness.
Packing N_value(const Graph &g, const HPattern &h, const PackingLimits &limits = {},
                const CopyLimits &copy_limits = {});
/// N^R_χ(G,H) with witness.
Packing N_rainbow_value(const Graph &g, const HPattern &h, const EdgeColoring &chi,
                        const PackingLimits &limits = {}, const CopyLimits &copy_limits = {});

/// Partition of E(G) into copies and single edges. Copies first (sorted),
/// then leftover single edges (sorted).
struct Decomposition {
  std::vector<SubgraphCopy> copies;
  std::vector<EdgeId> single_edges;
  PackingMode mode = PackingMode::unrestricted;

  std::int64_t parts() const {
    return static_cast<std::int64_t>(copies.size() + single_edges.size());
  }
};

Decomposition extract_decomposition(const Graph &g, const Packing &p);
/// Parts disjoint and covering E(g) exactly, copies have e(H) edges and are
/// rainbow when `chi` is given.
bool is_valid_decomposition(const Graph &g, const Decomposition &d, const HPattern &h,
                            const EdgeColoring *chi = nullptr);

struct PhiResult {
  std::int64_t value = 0; ///< φ or φ^R_χ
  Packing packing;
  Decomposition decomposition;
};

/// φ(G,H) = e(G) - (e(H)-1) N(G,H); the witness decomposition is re-verified
/// (InvariantViolation on mismatch).
PhiResult phi(const Graph &g, const HPattern &h, const PackingLimits &limits = {},
              const CopyLimits &copy_limits = {});
PhiResult phi_rainbow(const Graph &g, const HPattern &h, const EdgeColoring &chi,
                      const PackingLimits &limits = {}, const CopyLimits &copy_limits = {});

/// e(G) - (e(H)-1) k.
std::int64_t phi_from_packing_size(const Graph &g, const HPattern &h, std::int64_t k);

// --- heuristics -------------------------------------------------------------

/// First-fit over candidates ordered by conflict degree, ties broken by a
/// seeded shuffle.
Packing greedy_packing(std::span<const SubgraphCopy> candidates, std::uint64_t order_seed);

/// Improves `start` by insertions (depth 1) and by 1-out/2-in swaps
/// (depth 2) until neither applies. Never decreases the size.
Packing local_search_packing(std::span<const SubgraphCopy> candidates, const Packing &start,
                             int swap_depth = 2);

struct HypergraphStats {
  std::int64_t vertices = 0;    ///< host edges
  std::int64_t hyperedges = 0;  ///< candidate copies
  int uniformity = 0;           ///< e(H)
  std::int64_t max_degree = 0;
  std::int64_t max_codegree = 0;
};

struct HypergraphMatching {
  Packing packing;
  double covered_fraction = 0.0; ///< host edges covered by the matching
  HypergraphStats stats;
};

/// Random greedy matching in the hypergraph whose vertices are host edges and
/// whose hyperedges are the candidate copies: hyperedges are scanned in a
/// uniformly random order and kept when disjoint from those already kept.
HypergraphMatching hypergraph_matching_greedy(std::span<const SubgraphCopy> candidates,
                                              int host_edges, std::uint64_t seed);

} // namespace rainbow
