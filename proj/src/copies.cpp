#include "rainbow/copies.hpp"
#include "rainbow/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rainbow {

namespace {

Graph drop_isolated(const Graph &g) {
  std::vector<EdgeId> all(static_cast<std::size_t>(g.size()));
  std::iota(all.begin(), all.end(), 0);
  return g.edge_induced(all);
}

// Vertex v may use colours up to one past the largest used so far.
bool colorable(const Graph &g, int k, std::vector<int> &col, Vertex v, int max_used) {
  if (v == g.order())
    return true;
  for (int c = 0; c < k && c <= max_used + 1; ++c) {
    bool ok = true;
    for (Vertex w = 0; w < v && ok; ++w)
      ok = !(g.adjacent(v, w) && col[static_cast<std::size_t>(w)] == c);
    if (!ok)
      continue;
    col[static_cast<std::size_t>(v)] = c;
    if (colorable(g, k, col, v + 1, std::max(max_used, c)))
      return true;
  }
  return false;
}

} // namespace

int chromatic_number(const Graph &g) {
  if (g.order() == 0)
    return 0;
  if (g.size() == 0)
    return 1;
  for (int k = 1;; ++k) {
    std::vector<int> col(static_cast<std::size_t>(g.order()), -1);
    if (colorable(g, k, col, 0, -1))
      return k;
  }
}

HPattern::HPattern(Graph pattern) : pattern_(drop_isolated(pattern)) {
  if (pattern_.size() < 2)
    throw std::invalid_argument("pattern must have at least 2 edges");
  chromatic_ = rainbow::chromatic_number(pattern_);
  const int n = pattern_.order();
  if (pattern_.size() == n * (n - 1) / 2)
    clique_order_ = n;
}

HPattern HPattern::clique(int r) {
  if (r < 3)
    throw std::invalid_argument("clique pattern needs r >= 3");
  return HPattern(complete_graph(r));
}

std::string HPattern::name() const {
  if (clique_order_)
    return "K" + std::to_string(*clique_order_);
  return write_graph6(pattern_);
}

SubgraphCopy make_copy(const Graph &host, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  SubgraphCopy c;
  for (EdgeId e : edges) {
    c.vertices.push_back(host.edge(e).u);
    c.vertices.push_back(host.edge(e).v);
  }
  std::sort(c.vertices.begin(), c.vertices.end());
  c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
  c.edges = std::move(edges);
  return c;
}

namespace {

void extend_clique(const Graph &g, int r, std::vector<Vertex> &chosen, const VertexSet &cand,
                   std::vector<SubgraphCopy> &out) {
  if (static_cast<int>(chosen.size()) == r) {
    std::vector<EdgeId> edges;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        edges.push_back(g.edge_id(chosen[i], chosen[j]));
    out.push_back(make_copy(g, std::move(edges)));
    return;
  }
  const std::size_t need = static_cast<std::size_t>(r) - chosen.size();
  if (cand.count() < need)
    return;
  for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
    VertexSet next = cand & g.neighbors(static_cast<Vertex>(v));
    // Only extend with larger labels so each clique is produced once.
    for (auto w = next.find_first(); w != VertexSet::npos && w <= v; w = next.find_next(w))
      next.reset(w);
    chosen.push_back(static_cast<Vertex>(v));
    extend_clique(g, r, chosen, next, out);
    chosen.pop_back();
  }
}

class EmbeddingSearch {
public:
  EmbeddingSearch(const Graph &host, const Graph &pattern, std::uint64_t budget)
      : host_(host), pat_(pattern), budget_(budget) {
    // Pattern vertices in connected, high-degree-first order.
    const int k = pat_.order();
    std::vector<bool> placed(static_cast<std::size_t>(k), false);
    while (static_cast<int>(order_.size()) < k) {
      Vertex best = -1;
      int best_links = -1, best_deg = -1;
      for (Vertex p = 0; p < k; ++p) {
        if (placed[static_cast<std::size_t>(p)])
          continue;
        int links = 0;
        for (Vertex q : order_)
          links += pat_.adjacent(p, q) ? 1 : 0;
        if (links > best_links || (links == best_links && pat_.degree(p) > best_deg)) {
          best = p;
          best_links = links;
          best_deg = pat_.degree(p);
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
    }
    image_.assign(static_cast<std::size_t>(k), -1);
    host_used_.assign(static_cast<std::size_t>(host.order()), false);
  }

  std::set<std::vector<EdgeId>> run() {
    search(0);
    return found_;
  }

private:
  void search(std::size_t depth) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("subgraph enumeration node budget exhausted",
                           static_cast<std::int64_t>(found_.size()));
    if (depth == order_.size()) {
      std::vector<EdgeId> edges;
      edges.reserve(static_cast<std::size_t>(pat_.size()));
      for (const Edge &e : pat_.edges())
        edges.push_back(host_.edge_id(image_[static_cast<std::size_t>(e.u)],
                                      image_[static_cast<std::size_t>(e.v)]));
      std::sort(edges.begin(), edges.end());
      found_.insert(std::move(edges));
      return;
    }
    const Vertex p = order_[depth];
    for (Vertex h = 0; h < host_.order(); ++h) {
      if (host_used_[static_cast<std::size_t>(h)] || host_.degree(h) < pat_.degree(p))
        continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex q = order_[i];
        if (pat_.adjacent(p, q))
          ok = host_.adjacent(h, image_[static_cast<std::size_t>(q)]);
      }
      if (!ok)
        continue;
      image_[static_cast<std::size_t>(p)] = h;
      host_used_[static_cast<std::size_t>(h)] = true;
      search(depth + 1);
      host_used_[static_cast<std::size_t>(h)] = false;
    }
    image_[static_cast<std::size_t>(p)] = -1;
  }

  const Graph &host_;
  const Graph &pat_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> host_used_;
  std::set<std::vector<EdgeId>> found_;
};

} // namespace

std::vector<SubgraphCopy> enumerate_copies_general(const Graph &g, const HPattern &h,
                                                   const CopyLimits &limits) {
  if (g.order() > limits.general_vertex_ceiling)
    throw BudgetExceeded("general pattern search: host order " + std::to_string(g.order()) +
                             " exceeds ceiling " +
                             std::to_string(limits.general_vertex_ceiling),
                         0);
  std::vector<SubgraphCopy> out;
  if (g.size() < h.edge_count())
    return out;
  for (auto &edges : EmbeddingSearch(g, h.graph(), limits.node_budget).run())
    out.push_back(make_copy(g, edges));
  return out;
}

std::vector<SubgraphCopy> enumerate_copies(const Graph &g, const HPattern &h,
                                           const CopyLimits &limits) {
  if (!h.is_clique())
    return enumerate_copies_general(g, h, limits);
  std::vector<SubgraphCopy> out;
  std::vector<Vertex> chosen;
  VertexSet all(static_cast<std::size_t>(g.order()));
  all.set();
  extend_clique(g, *h.clique_order(), chosen, all, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_rainbow(const SubgraphCopy &copy, const EdgeColoring &chi) {
  std::vector<Color> seen;
  seen.reserve(copy.edges.size());
  for (EdgeId e : copy.edges)
    seen.push_back(chi[e]);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::vector<SubgraphCopy> rainbow_copies(const Graph &g, const HPattern &h,
                                         const EdgeColoring &chi, const CopyLimits &limits) {
  std::vector<SubgraphCopy> out;
  for (auto &c : enumerate_copies(g, h, limits))
    if (is_rainbow(c, chi))
      out.push_back(std::move(c));
  return out;
}

bool is_forced_rainbow(const Graph &host, const SubgraphCopy &copy) {
  for (std::size_t i = 0; i < copy.edges.size(); ++i)
    for (std::size_t j = i + 1; j < copy.edges.size(); ++j)
      if (!host.edge(copy.edges[i]).shares_vertex(host.edge(copy.edges[j])))
        return false;
  return true;
}

std::vector<EdgeCensus> nonrainbow_census(const Graph &g, const HPattern &h,
                                          const EdgeColoring &chi, const CopyLimits &limits) {
  std::vector<EdgeCensus> table(static_cast<std::size_t>(g.size()));
  for (EdgeId e = 0; e < g.size(); ++e)
    table[static_cast<std::size_t>(e)].edge = g.edge(e);
  for (const auto &c : enumerate_copies(g, h, limits)) {
    const bool rb = is_rainbow(c, chi);
    for (EdgeId e : c.edges)
      ++(rb ? table[static_cast<std::size_t>(e)].rainbow
            : table[static_cast<std::size_t>(e)].non_rainbow);
  }
  return table;
}

} // namespace rainbow
