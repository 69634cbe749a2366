#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow {

using Vertex = int;
using EdgeId = int;
using VertexSet = boost::dynamic_bitset<>;

inline constexpr EdgeId kNoEdge = -1;

/// Unordered vertex pair, stored normalized with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr bool shares_vertex(const Edge &o) const {
    return touches(o.u) || touches(o.v);
  }

  friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept in lexicographic order and
/// an edge's position in that order is its EdgeId; every other module
/// (colorings, copies, packings) addresses edges by EdgeId. Equality is
/// label-sensitive; use is_isomorphic() for structural comparison.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on self-loops, out-of-range endpoints or
  /// parallel edges.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  bool adjacent(Vertex a, Vertex b) const {
    return a != b && adj_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b));
  }
  EdgeId edge_id(Vertex a, Vertex b) const;
  const Edge &edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }
  const std::vector<Edge> &edges() const { return edges_; }
  const VertexSet &neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).count()); }
  int max_degree() const;
  std::vector<int> degree_sequence() const;

  /// Same vertex set plus the given extra edges.
  Graph with_edges(std::span<const Edge> extra) const;
  /// Edge-induced subgraph relabelled onto 0..k-1 (vertices in increasing
  /// original label order).
  Graph edge_induced(std::span<const EdgeId> ids) const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  std::vector<EdgeId> index_; // n*n, kNoEdge when absent
};

// --- reference graphs -------------------------------------------------------

/// Complete multipartite graph; parts receive consecutive labels in the given
/// order.
Graph complete_multipartite(std::span<const int> part_sizes);
/// Turán graph T_k(n): k parts with sizes differing by at most one, larger
/// parts first. Throws std::invalid_argument for k == 0.
Graph turan_graph(int n, int k);
std::vector<int> turan_part_sizes(int n, int k);
/// ex(n, K_r) = e(T_{r-1}(n)). Requires r >= 3.
std::int64_t turan_number(int n, int r);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph empty_graph(int n);

// --- isomorphism ------------------------------------------------------------

/// Largest order accepted by canonical_form (the code word must fit 64 bits).
inline constexpr int kCanonicalMaxOrder = 11;

/// Canonical relabelling: isomorphic graphs map to equal graphs.
Graph canonical_form(const Graph &g);
bool is_isomorphic(const Graph &a, const Graph &b);

/// One representative per isomorphism class of graphs on n vertices.
struct GraphClass {
  int n = 0;
  /// Canonical forms, sorted by (edge count, graph6).
  std::vector<Graph> graphs;

  std::size_t size() const { return graphs.size(); }
};

inline constexpr int kDefaultEnumerationCeiling = 8;

/// All non-isomorphic graphs on n vertices. Throws BudgetExceeded when
/// n > ceiling (ceiling itself may not exceed 10).
GraphClass enumerate_nonisomorphic(int n, int ceiling = kDefaultEnumerationCeiling);

// --- graph6 -----------------------------------------------------------------

std::string write_graph6(const Graph &g);
/// Accepts an optional ">>graph6<<" header and trailing newline.
/// Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view text);

} // namespace rainbow
