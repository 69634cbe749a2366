#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace rainbow {

namespace {

// Colour refinement seeded by degree. Colours are ranks of sorted
// signatures, so the final colouring is isomorphism-invariant.
std::vector<int> refine_colours(const Graph &g) {
  const int n = g.order();
  std::vector<int> colour = g.degree_sequence();
  {
    std::vector<int> distinct = colour;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int &c : colour)
      c = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) -
                           distinct.begin());
  }
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      auto &sig = signature[static_cast<std::size_t>(v)];
      sig.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (Vertex w = 0; w < n; ++w)
        if (g.adjacent(v, w))
          around.push_back(colour[static_cast<std::size_t>(w)]);
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v)
      colour[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(),
                           signature[static_cast<std::size_t>(v)]) -
          distinct.begin());
    if (distinct.size() == classes)
      break;
    classes = distinct.size();
  }
  return colour;
}

// Search over colour-respecting labellings for the one whose adjacency code
// (pairs (i,j), i<j, ordered by j then i, most significant first) is
// lexicographically largest.
class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph &g) : g_(g), n_(g.order()) {
    colour_ = refine_colours(g);
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    perm_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
    total_bits_ = n_ * (n_ - 1) / 2;
  }

  std::vector<Vertex> run() {
    search(0, 0);
    return best_perm_;
  }

private:
  void search(int pos, std::uint64_t code) {
    if (pos == n_) {
      if (!have_best_ || code > best_code_) {
        best_code_ = code;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    const int want = slot_colour_[static_cast<std::size_t>(pos)];
    const int len = (pos + 1) * pos / 2;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] || colour_[static_cast<std::size_t>(v)] != want)
        continue;
      std::uint64_t next = code;
      for (int i = 0; i < pos; ++i)
        next = (next << 1) | (g_.adjacent(perm_[static_cast<std::size_t>(i)], v) ? 1u : 0u);
      // The incumbent may have improved since the parent was entered, so
      // compare against its current prefix every time.
      if (have_best_ && len > 0 && next < (best_code_ >> (total_bits_ - len)))
        continue;
      perm_[static_cast<std::size_t>(pos)] = v;
      used_[static_cast<std::size_t>(v)] = true;
      search(pos + 1, next);
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  const Graph &g_;
  int n_;
  int total_bits_ = 0;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<Vertex> perm_;
  std::vector<bool> used_;
  bool have_best_ = false;
  std::uint64_t best_code_ = 0;
  std::vector<Vertex> best_perm_;
};

} // namespace

Graph canonical_form(const Graph &g) {
  if (g.order() > kCanonicalMaxOrder)
    throw std::invalid_argument("canonical_form supports at most " +
                                std::to_string(kCanonicalMaxOrder) + " vertices");
  if (g.order() == 0)
    return g;
  const std::vector<Vertex> perm = CanonicalSearch(g).run();
  std::vector<Vertex> position(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    position[static_cast<std::size_t>(perm[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.size()));
  for (const Edge &e : g.edges())
    edges.emplace_back(position[static_cast<std::size_t>(e.u)],
                       position[static_cast<std::size_t>(e.v)]);
  return Graph(g.order(), edges);
}

bool is_isomorphic(const Graph &a, const Graph &b) {
  if (a.order() != b.order() || a.size() != b.size())
    return false;
  auto da = a.degree_sequence(), db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db)
    return false;
  return canonical_form(a) == canonical_form(b);
}

GraphClass enumerate_nonisomorphic(int n, int ceiling) {
  if (n < 0)
    throw std::invalid_argument("graph order must be non-negative");
  if (ceiling > 10)
    throw std::invalid_argument("enumeration ceiling may not exceed 10");
  if (n > ceiling)
    throw BudgetExceeded("enumerate_nonisomorphic: n=" + std::to_string(n) +
                             " exceeds ceiling " + std::to_string(ceiling),
                         0);

  // Grow from the empty graph one vertex at a time: every graph on k+1
  // vertices is some graph on k vertices plus a vertex joined to a subset.
  std::vector<Graph> level{Graph(0)};
  for (int k = 0; k < n; ++k) {
    std::unordered_set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph &base : level) {
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<Edge> extra;
        for (int v = 0; v < k; ++v)
          if (mask & (1u << v))
            extra.emplace_back(v, k);
        std::vector<Edge> all = base.edges();
        all.insert(all.end(), extra.begin(), extra.end());
        Graph canon = canonical_form(Graph(k + 1, all));
        if (seen.insert(write_graph6(canon)).second)
          next.push_back(std::move(canon));
      }
    }
    level = std::move(next);
  }

  std::vector<std::pair<std::pair<int, std::string>, std::size_t>> keys;
  keys.reserve(level.size());
  for (std::size_t i = 0; i < level.size(); ++i)
    keys.push_back({{level[i].size(), write_graph6(level[i])}, i});
  std::sort(keys.begin(), keys.end());
  GraphClass out;
  out.n = n;
  out.graphs.reserve(level.size());
  for (const auto &k : keys)
    out.graphs.push_back(level[k.second]);
  return out;
}

} // namespace rainbow
