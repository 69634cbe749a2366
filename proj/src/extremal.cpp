#include "rainbow/extremal.hpp"
#include "rainbow/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace rainbow {

namespace {

using Mask = std::uint64_t;

class ColoringMaximizer {
public:
  ColoringMaximizer(const Graph &g, const HPattern &h, const ColoringSearchOptions &opt)
      : g_(g), opt_(opt), e_(g.size()), weight_(h.edge_count() - 1),
        copies_(enumerate_copies(g, h, opt.copies)) {
    if (g.order() > 64 || g.size() > 64)
      throw std::invalid_argument("colouring search supports at most 64 vertices and edges");
    std::vector<std::vector<int>> sets;
    for (const auto &c : copies_) {
      sets.emplace_back(c.edges.begin(), c.edges.end());
      Mask m = 0;
      for (EdgeId e : c.edges)
        m |= Mask{1} << e;
      copy_mask_.push_back(m);
      last_edge_.push_back(c.edges.back());
    }
    packer_ = std::make_unique<SetPacker>(static_cast<std::size_t>(e_), sets);
    through_.assign(static_cast<std::size_t>(e_), {});
    for (std::size_t c = 0; c < copies_.size(); ++c)
      for (EdgeId e : copies_[c].edges)
        through_[static_cast<std::size_t>(e)].push_back(c);
  }

  ColoringMaxResult run() {
    ColoringMaxResult r;
    if (copies_.empty()) {
      r.value = r.upper_bound = e_;
      r.witness = to_partition(g_, vizing_coloring(g_));
      r.proven_optimal = true;
      r.pattern_free = true;
      return r;
    }

    CandidateMask forced(copies_.size());
    for (std::size_t c = 0; c < copies_.size(); ++c)
      if (is_forced_rainbow(g_, copies_[c]))
        forced.set(c);
    upper_ = e_ - weight_ * (forced.any() ? packer_->maximum(forced, opt_.packing) : 0);
    // Every colouring is at least φ(G,H); there is no witness for it yet.
    best_ = e_ - weight_ * packer_->maximum({}, opt_.packing);
    have_witness_ = false;

    leaf_cap_ = g_.size() > opt_.full_edge_ceiling ? opt_.partition_budget : 0;
    block_of_.assign(static_cast<std::size_t>(e_), -1);
    dead_.assign(copies_.size(), 0);

    const bool finished = walk(0);
    r.value = best_;
    r.witness = witness_;
    r.upper_bound = upper_;
    r.leaves = leaves_;
    r.memo_hits = memo_hits_;
    r.proven_optimal = finished || best_ >= upper_;
    if (!r.proven_optimal && opt_.strict)
      throw BudgetExceeded("colouring search partition budget exhausted", best_, false);
    return r;
  }

private:
  bool done() const { return have_witness_ && best_ >= upper_; }

  // Lower bound on N^R for every completion: copies fully coloured and still
  // rainbow are rainbow in every completion, and any packing of them counts.
  std::int64_t certain_packing(EdgeId next) const {
    Mask used = 0;
    std::int64_t k = 0;
    for (std::size_t c = 0; c < copies_.size(); ++c)
      if (last_edge_[c] < next && dead_[c] == 0 && (copy_mask_[c] & used) == 0) {
        used |= copy_mask_[c];
        ++k;
      }
    return k;
  }

  std::int64_t evaluate_leaf() {
    std::vector<Mask> key((copies_.size() + 63) / 64, 0);
    CandidateMask alive(copies_.size());
    for (std::size_t c = 0; c < copies_.size(); ++c)
      if (dead_[c] == 0) {
        key[c / 64] |= Mask{1} << (c % 64);
        alive.set(c);
      }
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++memo_hits_;
      return it->second;
    }
    const std::int64_t value =
        alive.any() ? e_ - weight_ * packer_->maximum(alive, opt_.packing) : e_;
    memo_.emplace(std::move(key), value);
    return value;
  }

  // False when the leaf cap stopped the walk.
  bool walk(EdgeId e) {
    if (done())
      return true;
    if (e == e_) {
      if (leaf_cap_ != 0 && leaves_ >= leaf_cap_)
        return false;
      ++leaves_;
      const std::int64_t v = evaluate_leaf();
      if (v > best_ || (!have_witness_ && v >= best_)) {
        best_ = v;
        have_witness_ = true;
        witness_.blocks.clear();
        for (const Mask &b : block_edges_) {
          std::vector<EdgeId> block;
          for (Mask x = b; x != 0; x &= x - 1)
            block.push_back(std::countr_zero(x));
          witness_.blocks.push_back(std::move(block));
        }
      }
      return true;
    }
    if (e > 0) {
      const std::int64_t ceiling = e_ - weight_ * certain_packing(e);
      if (ceiling < best_ || (have_witness_ && ceiling <= best_))
        return true;
    }

    const Edge &uv = g_.edge(e);
    const Mask ends = (Mask{1} << uv.u) | (Mask{1} << uv.v);
    const std::size_t open = block_vertices_.size();
    for (std::size_t b = 0; b <= open; ++b) {
      if (b < open && (block_vertices_[b] & ends) != 0)
        continue;
      if (b == open) {
        block_vertices_.push_back(0);
        block_edges_.push_back(0);
      }
      assign(e, static_cast<int>(b), ends, +1);
      const bool go_on = walk(e + 1);
      assign(e, static_cast<int>(b), ends, -1);
      if (b == open) {
        block_vertices_.pop_back();
        block_edges_.pop_back();
      }
      if (!go_on)
        return false;
      if (done())
        return true;
    }
    return true;
  }

  void assign(EdgeId e, int b, Mask ends, int dir) {
    const auto ub = static_cast<std::size_t>(b);
    if (dir > 0) {
      block_of_[static_cast<std::size_t>(e)] = b;
      block_vertices_[ub] |= ends;
      block_edges_[ub] |= Mask{1} << e;
    }
    for (std::size_t c : through_[static_cast<std::size_t>(e)])
      for (EdgeId f : copies_[c].edges)
        if (f < e && block_of_[static_cast<std::size_t>(f)] == b)
          dead_[c] += dir;
    if (dir < 0) {
      block_of_[static_cast<std::size_t>(e)] = -1;
      block_vertices_[ub] &= ~ends;
      block_edges_[ub] &= ~(Mask{1} << e);
    }
  }

  const Graph &g_;
  const ColoringSearchOptions &opt_;
  std::int64_t e_;
  std::int64_t weight_;
  std::vector<SubgraphCopy> copies_;
  std::vector<Mask> copy_mask_;
  std::vector<EdgeId> last_edge_;
  std::vector<std::vector<std::size_t>> through_;
  std::unique_ptr<SetPacker> packer_;

  std::int64_t upper_ = 0;
  std::int64_t best_ = 0;
  bool have_witness_ = false;
  MatchingPartition witness_;
  std::uint64_t leaf_cap_ = 0;
  std::uint64_t leaves_ = 0;
  std::uint64_t memo_hits_ = 0;
  std::map<std::vector<Mask>, std::int64_t> memo_;

  std::vector<int> block_of_;
  std::vector<Mask> block_vertices_;
  std::vector<Mask> block_edges_;
  std::vector<int> dead_; // same-colour edge pairs inside each copy
};

} // namespace

ColoringMaxResult phi_R_max_over_colorings(const Graph &g, const HPattern &h,
                                           const ColoringSearchOptions &options) {
  return ColoringMaximizer(g, h, options).run();
}

namespace {

SweepEntry evaluate_graph(const Graph &g, const HPattern &h, bool rainbow,
                          const ColoringSearchOptions &opt, MatchingPartition &witness) {
  SweepEntry entry;
  entry.graph6 = write_graph6(g);
  entry.edges = g.size();
  try {
    entry.phi = phi(g, h, opt.packing, opt.copies).value;
  } catch (const BudgetExceeded &ex) {
    // φ is bounded above by the incumbent packing.
    entry.phi = phi_from_packing_size(g, h, ex.best_found());
    entry.complete = false;
  }
  if (rainbow) {
    ColoringSearchOptions relaxed = opt;
    relaxed.strict = false;
    try {
      const ColoringMaxResult r = phi_R_max_over_colorings(g, h, relaxed);
      entry.phi_R_max = r.value;
      entry.complete = entry.complete && r.proven_optimal;
      witness = r.witness;
    } catch (const BudgetExceeded &ex) {
      entry.phi_R_max = std::max(entry.phi, ex.best_found());
      entry.complete = false;
    }
  }
  return entry;
}

} // namespace

ExtremalRecord phi_n_table(int n, const HPattern &h, bool rainbow, const SweepOptions &options) {
  const GraphClass cls = enumerate_nonisomorphic(n, options.enumeration_ceiling);
  const std::size_t count = cls.size();
  std::vector<SweepEntry> entries(count);
  std::vector<MatchingPartition> witnesses(count);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        entries[i] = evaluate_graph(cls.graphs[i], h, rainbow, options.coloring, witnesses[i]);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure)
          failure = std::current_exception();
        next = count;
      }
    }
  };
  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);

  ExtremalRecord rec;
  rec.n = n;
  rec.pattern = h.name();
  rec.rainbow = rainbow;
  rec.graphs_swept = count;

  std::int64_t h_free_max = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const SweepEntry &s = entries[i];
    rec.complete = rec.complete && s.complete;
    rec.value = std::max(rec.value, rainbow ? s.phi_R_max : s.phi);
    // An H-free graph has φ = e(G) and conversely φ = e(G) forces N = 0.
    if (s.phi == s.edges)
      h_free_max = std::max<std::int64_t>(h_free_max, s.edges);
  }
  for (std::size_t i = 0; i < count; ++i) {
    if ((rainbow ? entries[i].phi_R_max : entries[i].phi) != rec.value)
      continue;
    rec.maximizers.push_back(entries[i].graph6);
    if (rainbow)
      rec.witness_colorings.push_back(witnesses[i]);
  }

  if (h.is_clique()) {
    rec.reference = turan_number(n, *h.clique_order());
    if (rec.complete && h_free_max != rec.reference)
      throw InvariantViolation("sweep H-free maximum disagrees with ex(n,K_r)");
  } else {
    rec.reference = h_free_max;
  }
  rec.exceeds_reference = rec.value > rec.reference;

  const int parts = h.chromatic_number() - 1;
  if (parts >= 1) {
    const std::string turan = write_graph6(canonical_form(turan_graph(n, parts)));
    rec.turan_is_maximizer =
        std::find(rec.maximizers.begin(), rec.maximizers.end(), turan) != rec.maximizers.end();
    rec.turan_unique_maximizer = rec.turan_is_maximizer && rec.maximizers.size() == 1;
  }
  if (options.keep_per_graph)
    rec.per_graph = std::move(entries);
  return rec;
}

std::vector<TheoremRow> verify_main_theorem_small(int n_min, int n_max,
                                                  const SweepOptions &options) {
  const HPattern triangle = HPattern::clique(3);
  std::vector<TheoremRow> rows;
  for (int n = std::max(n_min, 3); n <= n_max; ++n) {
    const ExtremalRecord rec = phi_n_table(n, triangle, true, options);
    TheoremRow row;
    row.n = n;
    row.value = rec.value;
    row.expected = static_cast<std::int64_t>(n) * n / 4;
    row.turan_unique_maximizer = rec.turan_unique_maximizer;
    row.maximizers = rec.maximizers;
    if (!rec.complete || row.value != row.expected)
      throw InvariantViolation("φ^R(" + std::to_string(n) + ",K3) = " +
                               std::to_string(row.value) + ", expected " +
                               std::to_string(row.expected));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace rainbow
