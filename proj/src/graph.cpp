#include "rainbow/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rainbow {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0)
    throw std::invalid_argument("graph order must be non-negative");
  const auto un = static_cast<std::size_t>(n);
  adj_.assign(un, VertexSet(un));
  index_.assign(un * un, kNoEdge);

  edges_.reserve(edges.size());
  for (const Edge &raw : edges) {
    const Edge e(raw.u, raw.v);
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("parallel edge");

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto u = static_cast<std::size_t>(edges_[i].u);
    const auto v = static_cast<std::size_t>(edges_[i].v);
    adj_[u].set(v);
    adj_[v].set(u);
    index_[u * un + v] = index_[v * un + u] = static_cast<EdgeId>(i);
  }
}

EdgeId Graph::edge_id(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_)
    return kNoEdge;
  return index_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(b)];
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v)
    best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v)
    d[static_cast<std::size_t>(v)] = degree(v);
  return d;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(n_, all);
}

Graph Graph::edge_induced(std::span<const EdgeId> ids) const {
  std::vector<Vertex> support;
  for (EdgeId id : ids) {
    support.push_back(edge(id).u);
    support.push_back(edge(id).v);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  auto relabel = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(support.begin(), support.end(), x) -
                               support.begin());
  };
  std::vector<Edge> out;
  out.reserve(ids.size());
  for (EdgeId id : ids)
    out.emplace_back(relabel(edge(id).u), relabel(edge(id).v));
  return Graph(static_cast<int>(support.size()), out);
}

// --- reference graphs -------------------------------------------------------

Graph complete_multipartite(std::span<const int> part_sizes) {
  std::vector<int> first;
  int n = 0;
  for (int s : part_sizes) {
    if (s < 0)
      throw std::invalid_argument("negative part size");
    first.push_back(n);
    n += s;
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < part_sizes.size(); ++a)
    for (std::size_t b = a + 1; b < part_sizes.size(); ++b)
      for (int i = 0; i < part_sizes[a]; ++i)
        for (int j = 0; j < part_sizes[b]; ++j)
          edges.emplace_back(first[a] + i, first[b] + j);
  return Graph(n, edges);
}

std::vector<int> turan_part_sizes(int n, int k) {
  if (k <= 0)
    throw std::invalid_argument("Turán graph needs at least one part");
  if (n < 0)
    throw std::invalid_argument("graph order must be non-negative");
  std::vector<int> sizes(static_cast<std::size_t>(k), n / k);
  for (int i = 0; i < n % k; ++i)
    ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

Graph turan_graph(int n, int k) { return complete_multipartite(turan_part_sizes(n, k)); }

std::int64_t turan_number(int n, int r) {
  if (r < 3)
    throw std::invalid_argument("turan_number requires r >= 3");
  const auto sizes = turan_part_sizes(n, r - 1);
  std::int64_t total = 0, seen = 0;
  for (int s : sizes) {
    total += seen * s;
    seen += s;
  }
  return total;
}

Graph complete_graph(int n) {
  std::vector<int> ones(static_cast<std::size_t>(std::max(n, 0)), 1);
  return complete_multipartite(ones);
}

Graph cycle_graph(int n) {
  if (n < 3)
    throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.emplace_back(i, i + 1);
  return Graph(std::max(n, 0), edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i)
    edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph empty_graph(int n) { return Graph(n); }

} // namespace rainbow
