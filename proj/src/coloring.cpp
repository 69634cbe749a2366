#include "rainbow/coloring.hpp"
#include "rainbow/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rainbow {

std::size_t EdgeColoring::num_colors() const {
  std::set<Color> used;
  for (Color c : color_of)
    if (c != kUncolored)
      used.insert(c);
  return used.size();
}

bool verify_proper(const Graph &g, const EdgeColoring &chi) {
  if (chi.color_of.size() != static_cast<std::size_t>(g.size()))
    throw ColoringError("coloring covers " + std::to_string(chi.color_of.size()) +
                        " edges, host has " + std::to_string(g.size()));
  for (EdgeId e = 0; e < g.size(); ++e)
    if (chi[e] < 0)
      throw ColoringError("edge " + std::to_string(g.edge(e).u) + "-" +
                          std::to_string(g.edge(e).v) + " has no color");
  for (Vertex v = 0; v < g.order(); ++v) {
    std::set<Color> seen;
    for (Vertex w = 0; w < g.order(); ++w)
      if (g.adjacent(v, w) && !seen.insert(chi[g.edge_id(v, w)]).second)
        return false;
  }
  return true;
}

namespace {

// Smallest colour not in `blocked`, skipping nothing else.
Color first_free(const std::vector<bool> &blocked) {
  Color c = 0;
  while (static_cast<std::size_t>(c) < blocked.size() && blocked[static_cast<std::size_t>(c)])
    ++c;
  return c;
}

void first_fit(const Graph &g, EdgeColoring &chi) {
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (chi[e] != kUncolored)
      continue;
    const Edge &uv = g.edge(e);
    std::vector<bool> blocked(static_cast<std::size_t>(2 * g.size() + 1), false);
    for (Vertex end : {uv.u, uv.v})
      for (Vertex w = 0; w < g.order(); ++w)
        if (g.adjacent(end, w)) {
          const Color c = chi[g.edge_id(end, w)];
          if (c != kUncolored)
            blocked[static_cast<std::size_t>(c)] = true;
        }
    chi.color_of[static_cast<std::size_t>(e)] = first_free(blocked);
  }
}

} // namespace

EdgeColoring greedy_edge_coloring(const Graph &g) {
  EdgeColoring chi{std::vector<Color>(static_cast<std::size_t>(g.size()), kUncolored)};
  first_fit(g, chi);
  return chi;
}

EdgeColoring all_distinct_coloring(const Graph &g) {
  EdgeColoring chi;
  chi.color_of.resize(static_cast<std::size_t>(g.size()));
  for (EdgeId e = 0; e < g.size(); ++e)
    chi.color_of[static_cast<std::size_t>(e)] = e;
  return chi;
}

EdgeColoring rainbow_forcing_coloring(const Graph &g, std::span<const EdgeId> copy_edges) {
  EdgeColoring chi{std::vector<Color>(static_cast<std::size_t>(g.size()), kUncolored)};
  Color next = 0;
  for (EdgeId e : copy_edges) {
    if (e < 0 || e >= g.size())
      throw std::invalid_argument("copy edge is not an edge of the host");
    if (chi[e] != kUncolored)
      throw std::invalid_argument("copy lists an edge twice");
    chi.color_of[static_cast<std::size_t>(e)] = next++;
  }
  first_fit(g, chi);
  return chi;
}

namespace {

// Misra–Gries edge colouring on a dense colour matrix.
class MisraGries {
public:
  explicit MisraGries(const Graph &g)
      : g_(g), n_(g.order()), palette_(g.max_degree() + 1),
        col_(static_cast<std::size_t>(n_ * n_), kUncolored) {}

  EdgeColoring run() {
    for (const Edge &e : g_.edges())
      color_edge(e.u, e.v);
    EdgeColoring chi;
    chi.color_of.reserve(static_cast<std::size_t>(g_.size()));
    for (const Edge &e : g_.edges())
      chi.color_of.push_back(at(e.u, e.v));
    return chi;
  }

private:
  Color &at(Vertex a, Vertex b) {
    return col_[static_cast<std::size_t>(a * n_ + b)];
  }
  void set(Vertex a, Vertex b, Color c) { at(a, b) = at(b, a) = c; }

  bool is_free(Vertex v, Color c) {
    for (Vertex w = 0; w < n_; ++w)
      if (g_.adjacent(v, w) && at(v, w) == c)
        return false;
    return true;
  }

  Color free_color(Vertex v) {
    for (Color c = 0; c < palette_; ++c)
      if (is_free(v, c))
        return c;
    throw InvariantViolation("Misra–Gries: no free colour within Δ+1");
  }

  std::vector<Vertex> maximal_fan(Vertex u, Vertex v) {
    std::vector<Vertex> fan{v};
    std::vector<bool> in_fan(static_cast<std::size_t>(n_), false);
    in_fan[static_cast<std::size_t>(v)] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex w = 0; w < n_; ++w) {
        if (!g_.adjacent(u, w) || in_fan[static_cast<std::size_t>(w)])
          continue;
        const Color c = at(u, w);
        if (c != kUncolored && is_free(fan.back(), c)) {
          fan.push_back(w);
          in_fan[static_cast<std::size_t>(w)] = true;
          grew = true;
          break;
        }
      }
    }
    return fan;
  }

  // Swap c and d along the maximal path from u that starts with colour d.
  void invert_path(Vertex u, Color c, Color d) {
    std::vector<std::pair<Vertex, Vertex>> path;
    Vertex cur = u, prev = -1;
    Color want = d;
    for (;;) {
      Vertex step = -1;
      for (Vertex w = 0; w < n_; ++w)
        if (w != prev && g_.adjacent(cur, w) && at(cur, w) == want) {
          step = w;
          break;
        }
      if (step < 0)
        break;
      path.emplace_back(cur, step);
      prev = cur;
      cur = step;
      want = want == d ? c : d;
    }
    for (auto [a, b] : path)
      set(a, b, at(a, b) == d ? c : d);
  }

  void color_edge(Vertex u, Vertex v) {
    std::vector<Vertex> fan = maximal_fan(u, v);
    const Color c = free_color(u);
    const Color d = free_color(fan.back());
    if (c != d)
      invert_path(u, c, d);

    // Longest prefix that is still a fan, then its first vertex where d is free.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0 && !is_free(fan[i - 1], at(u, fan[i])))
        break;
      if (is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan.size())
      throw InvariantViolation("Misra–Gries: no fan vertex with free colour");

    for (std::size_t i = 0; i < w; ++i)
      set(u, fan[i], at(u, fan[i + 1]));
    set(u, fan[w], d);
  }

  const Graph &g_;
  int n_;
  Color palette_;
  std::vector<Color> col_;
};

} // namespace

EdgeColoring vizing_coloring(const Graph &g) { return MisraGries(g).run(); }

MatchingPartition to_partition(const Graph &g, const EdgeColoring &chi) {
  if (chi.color_of.size() != static_cast<std::size_t>(g.size()))
    throw ColoringError("coloring does not match host edge count");
  std::vector<std::pair<Color, EdgeId>> tagged;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (chi[e] < 0)
      throw ColoringError("edge without color");
    tagged.emplace_back(chi[e], e);
  }
  std::sort(tagged.begin(), tagged.end());
  MatchingPartition p;
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    if (i == 0 || tagged[i].first != tagged[i - 1].first)
      p.blocks.emplace_back();
    p.blocks.back().push_back(tagged[i].second);
  }
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return p;
}

EdgeColoring to_coloring(const Graph &g, const MatchingPartition &p) {
  EdgeColoring chi{std::vector<Color>(static_cast<std::size_t>(g.size()), kUncolored)};
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (EdgeId e : p.blocks[b])
      chi.color_of.at(static_cast<std::size_t>(e)) = static_cast<Color>(b);
  return chi;
}

bool is_valid_partition(const Graph &g, const MatchingPartition &p) {
  std::vector<int> hits(static_cast<std::size_t>(g.size()), 0);
  EdgeId prev_front = -1;
  for (const auto &block : p.blocks) {
    if (block.empty() || !std::is_sorted(block.begin(), block.end()) ||
        block.front() <= prev_front)
      return false;
    prev_front = block.front();
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] < 0 || block[i] >= g.size())
        return false;
      ++hits[static_cast<std::size_t>(block[i])];
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (g.edge(block[i]).shares_vertex(g.edge(block[j])))
          return false;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

namespace {

class PartitionWalker {
public:
  PartitionWalker(const Graph &g, const std::function<bool(const MatchingPartition &)> &visit,
                  std::uint64_t budget)
      : g_(g), visit_(visit), budget_(budget) {}

  PartitionWalk run() {
    walk(0);
    return result_;
  }

private:
  bool compatible(const std::vector<EdgeId> &block, EdgeId e) const {
    const Edge &x = g_.edge(e);
    return std::none_of(block.begin(), block.end(),
                        [&](EdgeId f) { return g_.edge(f).shares_vertex(x); });
  }

  // Returns false once the walk must stop.
  bool walk(EdgeId e) {
    if (e == g_.size()) {
      if (budget_ != 0 && result_.emitted == budget_) {
        result_.exhausted = false;
        return false;
      }
      ++result_.emitted;
      if (!visit_(current_)) {
        result_.exhausted = false;
        return false;
      }
      return true;
    }
    // Indices, not references: deeper levels append blocks.
    const std::size_t open = current_.blocks.size();
    for (std::size_t b = 0; b < open; ++b) {
      if (!compatible(current_.blocks[b], e))
        continue;
      current_.blocks[b].push_back(e);
      const bool go_on = walk(e + 1);
      current_.blocks[b].pop_back();
      if (!go_on)
        return false;
    }
    current_.blocks.push_back({e});
    const bool go_on = walk(e + 1);
    current_.blocks.pop_back();
    return go_on;
  }

  const Graph &g_;
  const std::function<bool(const MatchingPartition &)> &visit_;
  std::uint64_t budget_;
  MatchingPartition current_;
  PartitionWalk result_;
};

} // namespace

PartitionWalk for_each_matching_partition(
    const Graph &g, const std::function<bool(const MatchingPartition &)> &visitor,
    std::uint64_t budget, int edge_ceiling) {
  if (budget == 0 && g.size() > edge_ceiling)
    throw BudgetExceeded("matching-partition enumeration: " + std::to_string(g.size()) +
                             " edges exceed ceiling " + std::to_string(edge_ceiling) +
                             " and no budget was given",
                         0);
  return PartitionWalker(g, visitor, budget).run();
}

std::vector<MatchingPartition> enumerate_matching_partitions(const Graph &g,
                                                             std::uint64_t budget,
                                                             int edge_ceiling) {
  std::vector<MatchingPartition> out;
  const PartitionWalk walk = for_each_matching_partition(
      g,
      [&](const MatchingPartition &p) {
        out.push_back(p);
        return true;
      },
      budget, edge_ceiling);
  if (!walk.exhausted)
    throw BudgetExceeded("matching-partition budget exhausted after " +
                             std::to_string(walk.emitted) + " partitions",
                         static_cast<std::int64_t>(walk.emitted));
  return out;
}

} // namespace rainbow
