#include "doctest.h"
#include "oracles.hpp"

#include "rainbow/errors.hpp"
#include "rainbow/stability.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace rainbow;

namespace {

bool is_vertex_partition(const Graph &g, const PartitionResult &r, int k) {
  if (static_cast<int>(r.parts.size()) != k)
    return false;
  std::set<Vertex> seen;
  std::size_t total = 0;
  for (const auto &p : r.parts) {
    total += p.size();
    seen.insert(p.begin(), p.end());
  }
  return total == static_cast<std::size_t>(g.order()) &&
         seen.size() == static_cast<std::size_t>(g.order());
}

SparsifySetup tripartite(int size, double density, double p, int trials, std::uint64_t seed) {
  SparsifySetup s;
  s.part_sizes = {size, size, size};
  s.densities.assign(3, std::vector<double>(3, density));
  s.probabilities.assign(3, std::vector<double>(3, p));
  s.designated = Edge(0, size);
  s.trials = trials;
  s.seed = seed;
  return s;
}

} // namespace

TEST_CASE("min_internal_partition fixtures") {
  const PartitionResult t = min_internal_partition(turan_graph(8, 2), 2);
  CHECK(t.internal_edges == 0);
  CHECK(t.optimal);
  CHECK(min_internal_partition(complete_graph(5), 2).internal_edges == 4);
  CHECK(min_internal_partition(cycle_graph(5), 2).internal_edges == 1);
  CHECK(min_internal_partition(complete_graph(6), 3).internal_edges == 3);
}

TEST_CASE("exact partitions match brute force on random graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    for (int k : {2, 3}) {
      const PartitionResult r = min_internal_partition(g, k);
      CHECK(r.optimal);
      CHECK(r.internal_edges == oracle::min_internal(g, k));
      CHECK(is_vertex_partition(g, r, k));
      CHECK(count_internal_edges(g, r.parts) == r.internal_edges);
    }
  }
}

TEST_CASE("heuristic partitions are valid upper bounds") {
  std::mt19937_64 rng(43);
  PartitionOptions h;
  h.mode = PartitionMode::heuristic;
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(9, 0.5, rng);
    const PartitionResult r = min_internal_partition(g, 2, h);
    CHECK_FALSE(r.optimal);
    CHECK(is_vertex_partition(g, r, 2));
    CHECK(count_internal_edges(g, r.parts) == r.internal_edges);
    CHECK(r.internal_edges >= oracle::min_internal(g, 2));
  }
  // Heuristic mode has no order limit.
  const PartitionResult big = min_internal_partition(turan_graph(40, 3), 3, h);
  CHECK(big.internal_edges == 0);
  CHECK_THROWS(min_internal_partition(complete_graph(17), 2));
}

TEST_CASE("edk examples and the Hoi bound") {
  const std::vector<std::int64_t> ms{1, 2, 3};
  const auto rows = edk_experiment(6, 3, ms);
  REQUIRE(rows.size() == 3);
  for (const auto &row : rows) {
    CHECK(row.complete);
    CHECK(row.edges == 9 + row.m);
    CHECK(row.hoi_bound == doctest::Approx(row.m / 2.0));
    CHECK(row.min_packing >= static_cast<std::int64_t>(std::ceil(row.m / 2.0)));
    REQUIRE(row.gyori_tuza_reference);
    CHECK(*row.gyori_tuza_reference == doctest::Approx(5.0 * row.m / 9.0));
    // Every witness attains the minimum.
    for (const auto &w : row.witnesses) {
      const Graph g = parse_graph6(w);
      CHECK(g.size() == row.edges);
      CHECK(N_value(g, HPattern::clique(3)).size() == row.min_packing);
    }
  }
  CHECK(rows[0].min_packing >= 1);

  const std::vector<std::int64_t> zero{0};
  const auto m0 = edk_experiment(5, 3, zero);
  CHECK(m0[0].min_packing == 0);
  CHECK(std::find(m0[0].witnesses.begin(), m0[0].witnesses.end(),
                  write_graph6(canonical_form(turan_graph(5, 2)))) != m0[0].witnesses.end());

  const std::vector<std::int64_t> one{1};
  const auto r4 = edk_experiment(6, 4, one);
  CHECK(r4[0].hoi_bound == doctest::Approx(0.25));
  CHECK(r4[0].min_packing >= 1);
  CHECK_FALSE(r4[0].gyori_tuza_reference);

  const std::vector<std::int64_t> too_many{7};
  CHECK_THROWS_AS(edk_experiment(6, 3, too_many), std::domain_error);
}

TEST_CASE("edk minimum agrees with a direct sweep") {
  const std::vector<std::int64_t> ms{1, 2};
  const auto rows = edk_experiment(5, 3, ms);
  for (const auto &row : rows) {
    std::int64_t best = -1;
    std::size_t graphs = 0;
    for (const Graph &g : enumerate_nonisomorphic(5).graphs) {
      if (g.size() != row.edges)
        continue;
      ++graphs;
      const auto copies = enumerate_copies(g, HPattern::clique(3));
      const std::int64_t v = oracle::max_packing(oracle::edge_sets(copies));
      best = best < 0 ? v : std::min(best, v);
    }
    CHECK(row.graphs == graphs);
    CHECK(row.min_packing == best);
  }
}

TEST_CASE("bound table csv") {
  const std::vector<std::int64_t> ms{1};
  const auto rows = edk_experiment(5, 3, ms);
  const std::string csv = bound_table_csv(rows);
  CHECK(csv.rfind("n,r,m,min_packing,hoi_bound,gt_reference\n", 0) == 0);
  CHECK(csv.find("\n5,3,1,") != std::string::npos);
}

TEST_CASE("sparsification degenerate probabilities") {
  const SparsifyTrial all = sparsify_closure_mc(tripartite(8, 0.7, 1.0, 30, 5));
  REQUIRE(all.closed.size() == 30);
  for (std::int64_t c : all.closed)
    CHECK(c == all.family_size);
  CHECK(all.expectation == doctest::Approx(static_cast<double>(all.family_size)));
  CHECK(all.variance == 0.0);
  CHECK(all.z_score == 0.0);

  const SparsifyTrial none = sparsify_closure_mc(tripartite(8, 0.7, 0.0, 30, 5));
  for (std::int64_t c : none.closed)
    CHECK(c == 0);
  CHECK(none.expectation == 0.0);
}

TEST_CASE("sparsification trials stay in range and are reproducible") {
  const SparsifyTrial a = sparsify_closure_mc(tripartite(10, 0.5, 0.5, 100, 9));
  const SparsifyTrial b = sparsify_closure_mc(tripartite(10, 0.5, 0.5, 100, 9));
  CHECK(a.closed == b.closed);
  CHECK(a.host_edges == b.host_edges);
  for (std::int64_t c : a.closed) {
    CHECK(c >= 0);
    CHECK(c <= a.family_size);
  }
  const SparsifyTrial c = sparsify_closure_mc(tripartite(10, 0.5, 0.5, 100, 10));
  CHECK(c.closed != a.closed);
}

TEST_CASE("sparsification rejects bad setups") {
  SparsifySetup s = tripartite(5, 0.5, 0.5, 10, 1);
  s.seed.reset();
  CHECK_THROWS_AS(sparsify_closure_mc(s), std::invalid_argument);
  SparsifySetup inside = tripartite(5, 0.5, 0.5, 10, 1);
  inside.designated = Edge(0, 1);
  CHECK_THROWS_AS(sparsify_closure_mc(inside), std::invalid_argument);
}

TEST_CASE("sparsification mean concentrates") {
  const SparsifyTrial t = sparsify_closure_mc(tripartite(40, 0.5, 0.5, 2000, 20240517));
  CHECK(t.family_size > 0);
  CHECK(t.expectation == doctest::Approx(0.25 * static_cast<double>(t.family_size)));
  CHECK(std::abs(t.mean - t.expectation) <= 5.0 * t.standard_error);
  MESSAGE("family " << t.family_size << " mean " << t.mean << " se " << t.standard_error
                    << " z " << t.z_score);
}

TEST_CASE("near-Turán host") {
  const Graph h = near_turan_host(3, 4, true);
  CHECK(h.order() == 12);
  CHECK(h.size() == 48 + 1);
  CHECK(h.adjacent(0, 1));
  CHECK(near_turan_host(3, 4, false).size() == 48);
}

TEST_CASE("near-Turán rainbow finder examples") {
  const Graph bip = near_turan_host(2, 3, false);
  const RainbowSearchResult none = near_turan_rainbow_finder(2, 3, false, vizing_coloring(bip));
  CHECK_FALSE(none.witness);
  CHECK(none.certified_absent);

  for (int size = 2; size <= 6; ++size) {
    const Graph g = near_turan_host(2, size, true);
    const RainbowSearchResult r = near_turan_rainbow_finder(2, size, true, all_distinct_coloring(g));
    REQUIRE(r.witness);
    CHECK(r.witness->edges.size() == 3);
    CHECK(std::find(r.witness->edges.begin(), r.witness->edges.end(), g.edge_id(0, 1)) !=
          r.witness->edges.end());
    CHECK(is_rainbow(*r.witness, all_distinct_coloring(g)));
  }

  // k = 3, parts of 4: either a verified witness or certified absence.
  const Graph g = near_turan_host(3, 4, true);
  for (const EdgeColoring &chi : {vizing_coloring(g), greedy_edge_coloring(g)}) {
    const RainbowSearchResult r = near_turan_rainbow_finder(3, 4, true, chi);
    if (r.witness) {
      CHECK(is_rainbow(*r.witness, chi));
      CHECK(oracle::isomorphic(g.edge_induced(r.witness->edges), complete_graph(4)));
    } else {
      CHECK(r.certified_absent);
    }
  }
}

TEST_CASE("rainbow finder agrees with a filter over all copies") {
  std::mt19937_64 rng(47);
  const Graph g = near_turan_host(3, 3, true);
  const auto copies = enumerate_copies(g, HPattern::clique(4));
  const EdgeId internal = g.edge_id(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    const EdgeColoring chi = oracle::random_proper_coloring(g, rng);
    bool any = false;
    for (const auto &c : copies)
      any = any || (is_rainbow(c, chi) &&
                    std::find(c.edges.begin(), c.edges.end(), internal) != c.edges.end());
    const RainbowSearchResult r = near_turan_rainbow_finder(3, 3, true, chi);
    CHECK(r.witness.has_value() == any);
    CHECK(r.certified_absent == !any);
  }
}
