#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rainbow {

/// The fixed graph H being packed. Isolated vertices of the input are dropped
/// so copies can be identified with edge sets.
class HPattern {
public:
  /// Throws std::invalid_argument when e(H) < 2.
  explicit HPattern(Graph pattern);
  static HPattern clique(int r);

  const Graph &graph() const { return pattern_; }
  int edge_count() const { return pattern_.size(); }
  int chromatic_number() const { return chromatic_; }
  /// Clique order r when H = K_r.
  std::optional<int> clique_order() const { return clique_order_; }
  bool is_clique() const { return clique_order_.has_value(); }
  /// "K4" for cliques, otherwise the graph6 string.
  std::string name() const;

private:
  Graph pattern_;
  int chromatic_ = 0;
  std::optional<int> clique_order_;
};

int chromatic_number(const Graph &g);

/// One embedded copy of H, identified by its host edge set.
struct SubgraphCopy {
  std::vector<EdgeId> edges;     ///< sorted
  std::vector<Vertex> vertices;  ///< sorted support

  friend bool operator==(const SubgraphCopy &a, const SubgraphCopy &b) {
    return a.edges == b.edges;
  }
  friend auto operator<=>(const SubgraphCopy &a, const SubgraphCopy &b) {
    return a.edges <=> b.edges;
  }
};

SubgraphCopy make_copy(const Graph &host, std::vector<EdgeId> edges);

struct CopyLimits {
  /// Largest host order accepted on the general (non-clique) path.
  int general_vertex_ceiling = 12;
  /// Backtracking nodes allowed on the general path.
  std::uint64_t node_budget = 10'000'000;
};

/// Every copy of H in g exactly once, sorted by edge list. Cliques go through
/// ordered neighbourhood intersection; other patterns through backtracking
/// over vertex maps (BudgetExceeded past the limits).
std::vector<SubgraphCopy> enumerate_copies(const Graph &g, const HPattern &h,
                                           const CopyLimits &limits = {});
/// Always takes the general backtracking path, even for cliques.
std::vector<SubgraphCopy> enumerate_copies_general(const Graph &g, const HPattern &h,
                                                   const CopyLimits &limits = {});

bool is_rainbow(const SubgraphCopy &copy, const EdgeColoring &chi);

std::vector<SubgraphCopy> rainbow_copies(const Graph &g, const HPattern &h,
                                         const EdgeColoring &chi,
                                         const CopyLimits &limits = {});

/// A copy is rainbow under every proper colouring exactly when no two of its
/// edges are vertex-disjoint (triangles, stars).
bool is_forced_rainbow(const Graph &host, const SubgraphCopy &copy);

struct EdgeCensus {
  Edge edge;
  std::int64_t rainbow = 0;
  std::int64_t non_rainbow = 0;
};

/// Per host edge (in EdgeId order), how many copies through it are rainbow.
std::vector<EdgeCensus> nonrainbow_census(const Graph &g, const HPattern &h,
                                          const EdgeColoring &chi,
                                          const CopyLimits &limits = {});

} // namespace rainbow
