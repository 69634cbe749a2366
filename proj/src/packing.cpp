#include "rainbow/packing.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/random.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace rainbow {

const char *to_string(PackingMode mode) {
  return mode == PackingMode::rainbow ? "rainbow" : "unrestricted";
}

namespace {

using Words = std::vector<std::uint64_t>;

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void set_bit(Words &w, std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Words &w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1u; }

std::size_t popcount(const Words &w) {
  std::size_t c = 0;
  for (auto x : w)
    c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

std::size_t popcount_and(const Words &a, const Words &b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

bool none(const Words &w) {
  return std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
}

Words and_not(const Words &a, const Words &b) {
  Words r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] & ~b[i];
  return r;
}

template <typename F> void for_each_bit(const Words &w, F &&f) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::uint64_t x = w[i]; x != 0; x &= x - 1)
      f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
}

} // namespace

struct SetPacker::Search {
  std::uint64_t budget = 0;
  std::int64_t best = 0;
  std::int64_t upper = 0;
  std::vector<std::size_t> stack;
  std::vector<std::size_t> best_set;
};

SetPacker::SetPacker(std::size_t universe, std::span<const std::vector<int>> sets)
    : m_(sets.size()), universe_(universe), cw_(word_count(sets.size())),
      ew_(word_count(universe)) {
  elems_of_.assign(m_, Words(ew_, 0));
  sets_with_.assign(universe_, Words(cw_, 0));
  conflicts_.assign(m_, Words(cw_, 0));
  members_.assign(sets.begin(), sets.end());
  min_set_size_ = SIZE_MAX;
  for (std::size_t i = 0; i < m_; ++i) {
    if (sets[i].empty())
      throw std::invalid_argument("set packing candidates must be non-empty");
    for (int e : sets[i]) {
      if (e < 0 || static_cast<std::size_t>(e) >= universe_)
        throw std::invalid_argument("set packing element out of range");
      set_bit(elems_of_[i], static_cast<std::size_t>(e));
      set_bit(sets_with_[static_cast<std::size_t>(e)], i);
    }
    min_set_size_ = std::min(min_set_size_, popcount(elems_of_[i]));
  }
  if (m_ == 0)
    min_set_size_ = 1;
  for (std::size_t i = 0; i < m_; ++i)
    for (int e : sets[i])
      for (std::size_t w = 0; w < cw_; ++w)
        conflicts_[i][w] |= sets_with_[static_cast<std::size_t>(e)][w];
}

SetPacker::Words SetPacker::to_words(const CandidateMask &allowed) const {
  Words w(cw_, 0);
  if (allowed.empty()) {
    for (std::size_t i = 0; i < m_; ++i)
      set_bit(w, i);
    return w;
  }
  if (allowed.size() != m_)
    throw std::invalid_argument("candidate mask size mismatch");
  for (auto i = allowed.find_first(); i != CandidateMask::npos; i = allowed.find_next(i))
    set_bit(w, i);
  return w;
}

std::int64_t SetPacker::greedy_lower_bound(const Words &alive) const {
  Words live = alive;
  std::int64_t k = 0;
  for (std::size_t i = 0; i < m_; ++i)
    if (test_bit(live, i)) {
      ++k;
      live = and_not(live, conflicts_[i]);
    }
  return k;
}

std::int64_t SetPacker::bound(const Words &alive) const {
  Words covered(ew_, 0);
  for_each_bit(alive, [&](std::size_t c) {
    for (std::size_t w = 0; w < ew_; ++w)
      covered[w] |= elems_of_[c][w];
  });
  const auto by_elements = static_cast<std::int64_t>(popcount(covered) / min_set_size_);

  // Candidates sharing an element are pairwise conflicting, so a cover of the
  // live candidates by k elements caps the packing at k.
  Words rest = alive;
  std::int64_t cliques = 0;
  while (!none(rest) && cliques < by_elements) {
    std::size_t first = 0;
    for (std::size_t w = 0; w < cw_; ++w)
      if (rest[w]) {
        first = w * 64 + static_cast<std::size_t>(std::countr_zero(rest[w]));
        break;
      }
    int best_elem = members_[first].front();
    std::size_t best_hits = 0;
    for (int e : members_[first]) {
      const std::size_t hits = popcount_and(sets_with_[static_cast<std::size_t>(e)], rest);
      if (hits > best_hits) {
        best_hits = hits;
        best_elem = e;
      }
    }
    rest = and_not(rest, sets_with_[static_cast<std::size_t>(best_elem)]);
    ++cliques;
  }
  return std::min(by_elements, cliques);
}

namespace {

// Uncovered element lying in the fewest live candidates; -1 if none live.
int pick_branch_element(const std::vector<Words> &elems_of, const std::vector<Words> &sets_with,
                        const Words &alive, std::size_t ew) {
  Words covered(ew, 0);
  for_each_bit(alive, [&](std::size_t c) {
    for (std::size_t w = 0; w < ew; ++w)
      covered[w] |= elems_of[c][w];
  });
  int best = -1;
  std::size_t best_count = SIZE_MAX;
  for_each_bit(covered, [&](std::size_t e) {
    const std::size_t c = popcount_and(sets_with[e], alive);
    if (c < best_count) {
      best_count = c;
      best = static_cast<int>(e);
    }
  });
  return best;
}

} // namespace

void SetPacker::maximize(Search &s, const Words &alive, std::int64_t cur) {
  if (++nodes_ > s.budget)
    throw BudgetExceeded("set packing node budget exhausted", s.best);
  if (s.best >= s.upper)
    return;
  if (none(alive)) {
    if (cur > s.best) {
      s.best = cur;
      s.best_set = s.stack;
    }
    return;
  }
  if (cur + bound(alive) <= s.best)
    return;
  const int x = pick_branch_element(elems_of_, sets_with_, alive, ew_);
  const Words &with_x = sets_with_[static_cast<std::size_t>(x)];
  Words branch(cw_);
  for (std::size_t w = 0; w < cw_; ++w)
    branch[w] = with_x[w] & alive[w];
  for_each_bit(branch, [&](std::size_t c) {
    if (s.best >= s.upper)
      return;
    s.stack.push_back(c);
    maximize(s, and_not(alive, conflicts_[c]), cur + 1);
    s.stack.pop_back();
  });
  if (s.best < s.upper)
    maximize(s, and_not(alive, with_x), cur);
}

bool SetPacker::feasible(Search &s, const Words &alive, std::int64_t need) {
  if (need <= 0)
    return true;
  if (++nodes_ > s.budget)
    throw BudgetExceeded("set packing node budget exhausted", s.best);
  if (none(alive) || bound(alive) < need)
    return false;
  const int x = pick_branch_element(elems_of_, sets_with_, alive, ew_);
  const Words &with_x = sets_with_[static_cast<std::size_t>(x)];
  Words branch(cw_);
  for (std::size_t w = 0; w < cw_; ++w)
    branch[w] = with_x[w] & alive[w];
  bool found = false;
  for_each_bit(branch, [&](std::size_t c) {
    if (!found)
      found = feasible(s, and_not(alive, conflicts_[c]), need - 1);
  });
  return found || feasible(s, and_not(alive, with_x), need);
}

std::int64_t SetPacker::maximum(const CandidateMask &allowed, const PackingLimits &limits) {
  nodes_ = 0;
  const Words alive = to_words(allowed);
  Search s;
  s.budget = limits.node_budget;
  s.best = greedy_lower_bound(alive);
  s.upper = bound(alive);
  maximize(s, alive, 0);
  return s.best;
}

std::vector<std::size_t> SetPacker::witness(const CandidateMask &allowed,
                                            const PackingLimits &limits) {
  const std::int64_t k = maximum(allowed, limits);
  Search s;
  s.budget = limits.node_budget;
  s.best = k;

  std::vector<std::size_t> chosen;
  Words alive = to_words(allowed);
  for (std::size_t i = 0; i < m_ && static_cast<std::int64_t>(chosen.size()) < k; ++i) {
    if (!test_bit(alive, i))
      continue;
    Words next = and_not(alive, conflicts_[i]);
    for (std::size_t j = 0; j <= i; ++j)
      next[j / 64] &= ~(std::uint64_t{1} << (j % 64));
    if (feasible(s, next, k - static_cast<std::int64_t>(chosen.size()) - 1)) {
      chosen.push_back(i);
      alive = std::move(next);
    } else {
      alive[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
  }
  if (static_cast<std::int64_t>(chosen.size()) != k)
    throw InvariantViolation("set packing witness reconstruction fell short of the optimum");
  return chosen;
}

// --- packings over copies ---------------------------------------------------

namespace {

std::vector<std::vector<int>> edge_lists(std::span<const SubgraphCopy> candidates) {
  std::vector<std::vector<int>> sets;
  sets.reserve(candidates.size());
  for (const auto &c : candidates)
    sets.emplace_back(c.edges.begin(), c.edges.end());
  return sets;
}

int universe_of(std::span<const SubgraphCopy> candidates, int host_edges) {
  int u = host_edges;
  for (const auto &c : candidates)
    for (EdgeId e : c.edges)
      u = std::max(u, e + 1);
  return u;
}

Packing packing_from(std::span<const SubgraphCopy> candidates, std::vector<std::size_t> chosen,
                     PackingMode mode) {
  std::sort(chosen.begin(), chosen.end());
  Packing p;
  p.mode = mode;
  for (std::size_t i : chosen)
    p.copies.push_back(candidates[i]);
  p.chosen = std::move(chosen);
  return p;
}

} // namespace

bool is_valid_packing(const Graph &g, const Packing &p, const EdgeColoring *chi) {
  std::vector<bool> used(static_cast<std::size_t>(g.size()), false);
  for (const auto &c : p.copies) {
    for (EdgeId e : c.edges) {
      if (e < 0 || e >= g.size() || used[static_cast<std::size_t>(e)])
        return false;
      used[static_cast<std::size_t>(e)] = true;
    }
    if (chi != nullptr && !is_rainbow(c, *chi))
      return false;
  }
  return true;
}

Packing max_packing_exact(std::span<const SubgraphCopy> candidates, int host_edges,
                          const PackingLimits &limits) {
  const auto sets = edge_lists(candidates);
  SetPacker packer(static_cast<std::size_t>(universe_of(candidates, host_edges)), sets);
  return packing_from(candidates, packer.witness({}, limits), PackingMode::unrestricted);
}

Packing N_value(const Graph &g, const HPattern &h, const PackingLimits &limits,
                const CopyLimits &copy_limits) {
  const auto copies = enumerate_copies(g, h, copy_limits);
  return max_packing_exact(copies, g.size(), limits);
}

Packing N_rainbow_value(const Graph &g, const HPattern &h, const EdgeColoring &chi,
                        const PackingLimits &limits, const CopyLimits &copy_limits) {
  const auto copies = rainbow_copies(g, h, chi, copy_limits);
  Packing p = max_packing_exact(copies, g.size(), limits);
  p.mode = PackingMode::rainbow;
  return p;
}

Decomposition extract_decomposition(const Graph &g, const Packing &p) {
  Decomposition d;
  d.mode = p.mode;
  d.copies = p.copies;
  std::sort(d.copies.begin(), d.copies.end());
  std::vector<bool> covered(static_cast<std::size_t>(g.size()), false);
  for (const auto &c : d.copies)
    for (EdgeId e : c.edges)
      covered.at(static_cast<std::size_t>(e)) = true;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!covered[static_cast<std::size_t>(e)])
      d.single_edges.push_back(e);
  return d;
}

bool is_valid_decomposition(const Graph &g, const Decomposition &d, const HPattern &h,
                            const EdgeColoring *chi) {
  std::vector<int> hits(static_cast<std::size_t>(g.size()), 0);
  auto hit = [&](EdgeId e) {
    if (e < 0 || e >= g.size())
      return false;
    ++hits[static_cast<std::size_t>(e)];
    return true;
  };
  for (const auto &c : d.copies) {
    if (static_cast<int>(c.edges.size()) != h.edge_count())
      return false;
    if (chi != nullptr && !is_rainbow(c, *chi))
      return false;
    for (EdgeId e : c.edges)
      if (!hit(e))
        return false;
  }
  for (EdgeId e : d.single_edges)
    if (!hit(e))
      return false;
  if (!std::all_of(hits.begin(), hits.end(), [](int x) { return x == 1; }))
    return false;
  return d.parts() == phi_from_packing_size(g, h, static_cast<std::int64_t>(d.copies.size()));
}

std::int64_t phi_from_packing_size(const Graph &g, const HPattern &h, std::int64_t k) {
  return g.size() - (h.edge_count() - 1) * k;
}

namespace {

PhiResult finish_phi(const Graph &g, const HPattern &h, Packing packing,
                     const EdgeColoring *chi) {
  PhiResult r;
  r.value = phi_from_packing_size(g, h, packing.size());
  r.decomposition = extract_decomposition(g, packing);
  r.packing = std::move(packing);
  if (!is_valid_decomposition(g, r.decomposition, h, chi) ||
      r.decomposition.parts() != r.value)
    throw InvariantViolation("extracted decomposition does not realize the φ identity");
  return r;
}

} // namespace

PhiResult phi(const Graph &g, const HPattern &h, const PackingLimits &limits,
              const CopyLimits &copy_limits) {
  return finish_phi(g, h, N_value(g, h, limits, copy_limits), nullptr);
}

PhiResult phi_rainbow(const Graph &g, const HPattern &h, const EdgeColoring &chi,
                      const PackingLimits &limits, const CopyLimits &copy_limits) {
  if (!verify_proper(g, chi))
    throw std::invalid_argument("phi_rainbow requires a proper coloring");
  return finish_phi(g, h, N_rainbow_value(g, h, chi, limits, copy_limits), &chi);
}

// --- heuristics -------------------------------------------------------------

Packing greedy_packing(std::span<const SubgraphCopy> candidates, std::uint64_t order_seed) {
  const std::size_t m = candidates.size();
  std::map<EdgeId, std::vector<std::size_t>> holders;
  for (std::size_t i = 0; i < m; ++i)
    for (EdgeId e : candidates[i].edges)
      holders[e].push_back(i);
  std::vector<std::size_t> degree(m, 0);
  for (const auto &[e, list] : holders)
    for (std::size_t i : list)
      degree[i] += list.size() - 1;

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  Rng rng = make_stream(order_seed, 0);
  shuffle(order, rng);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });

  std::map<EdgeId, bool> used;
  std::vector<std::size_t> chosen;
  for (std::size_t i : order) {
    const auto &edges = candidates[i].edges;
    if (std::any_of(edges.begin(), edges.end(), [&](EdgeId e) { return used[e]; }))
      continue;
    for (EdgeId e : edges)
      used[e] = true;
    chosen.push_back(i);
  }
  return packing_from(candidates, std::move(chosen), PackingMode::unrestricted);
}

Packing local_search_packing(std::span<const SubgraphCopy> candidates, const Packing &start,
                             int swap_depth) {
  const std::size_t m = candidates.size();
  std::map<EdgeId, std::ptrdiff_t> owner; // edge -> candidate index, absent when free
  std::vector<bool> in(m, false);
  for (std::size_t i : start.chosen) {
    in.at(i) = true;
    for (EdgeId e : candidates[i].edges)
      owner[e] = static_cast<std::ptrdiff_t>(i);
  }
  auto free_except = [&](std::size_t c, std::ptrdiff_t ignore) {
    return std::all_of(candidates[c].edges.begin(), candidates[c].edges.end(), [&](EdgeId e) {
      auto it = owner.find(e);
      return it == owner.end() || it->second == ignore;
    });
  };
  auto take = [&](std::size_t c) {
    in[c] = true;
    for (EdgeId e : candidates[c].edges)
      owner[e] = static_cast<std::ptrdiff_t>(c);
  };
  auto drop = [&](std::size_t c) {
    in[c] = false;
    for (EdgeId e : candidates[c].edges)
      owner.erase(e);
  };
  auto disjoint = [&](std::size_t a, std::size_t b) {
    const auto &x = candidates[a].edges, &y = candidates[b].edges;
    std::vector<EdgeId> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    return common.empty();
  };

  for (bool improved = true; improved;) {
    improved = false;
    if (swap_depth >= 1)
      for (std::size_t c = 0; c < m; ++c)
        if (!in[c] && free_except(c, -1)) {
          take(c);
          improved = true;
        }
    if (improved || swap_depth < 2)
      continue;
    for (std::size_t p = 0; p < m && !improved; ++p) {
      if (!in[p])
        continue;
      std::vector<std::size_t> fits;
      for (std::size_t c = 0; c < m; ++c)
        if (!in[c] && free_except(c, static_cast<std::ptrdiff_t>(p)))
          fits.push_back(c);
      for (std::size_t a = 0; a < fits.size() && !improved; ++a)
        for (std::size_t b = a + 1; b < fits.size() && !improved; ++b)
          if (disjoint(fits[a], fits[b])) {
            drop(p);
            take(fits[a]);
            take(fits[b]);
            improved = true;
          }
    }
  }
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m; ++i)
    if (in[i])
      chosen.push_back(i);
  return packing_from(candidates, std::move(chosen), start.mode);
}

HypergraphMatching hypergraph_matching_greedy(std::span<const SubgraphCopy> candidates,
                                              int host_edges, std::uint64_t seed) {
  HypergraphMatching out;
  out.stats.vertices = host_edges;
  out.stats.hyperedges = static_cast<std::int64_t>(candidates.size());
  out.stats.uniformity = candidates.empty() ? 0 : static_cast<int>(candidates[0].edges.size());

  std::map<EdgeId, std::int64_t> degree;
  std::map<std::pair<EdgeId, EdgeId>, std::int64_t> codegree;
  for (const auto &c : candidates) {
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      out.stats.max_degree = std::max(out.stats.max_degree, ++degree[c.edges[i]]);
      for (std::size_t j = i + 1; j < c.edges.size(); ++j)
        out.stats.max_codegree =
            std::max(out.stats.max_codegree, ++codegree[{c.edges[i], c.edges[j]}]);
    }
  }

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng = make_stream(seed, 1);
  shuffle(order, rng);

  std::map<EdgeId, bool> used;
  std::vector<std::size_t> chosen;
  std::int64_t covered = 0;
  for (std::size_t i : order) {
    const auto &edges = candidates[i].edges;
    if (std::any_of(edges.begin(), edges.end(), [&](EdgeId e) { return used[e]; }))
      continue;
    for (EdgeId e : edges)
      used[e] = true;
    covered += static_cast<std::int64_t>(edges.size());
    chosen.push_back(i);
  }
  out.packing = packing_from(candidates, std::move(chosen), PackingMode::unrestricted);
  out.covered_fraction =
      host_edges > 0 ? static_cast<double>(covered) / static_cast<double>(host_edges) : 0.0;
  return out;
}

} // namespace rainbow
