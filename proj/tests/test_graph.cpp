#include "doctest.h"
#include "oracles.hpp"

#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

#include <random>

using namespace rainbow;

TEST_CASE("graph construction rejects loops and parallel edges") {
  CHECK_THROWS_AS(Graph(3, {Edge(1, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {Edge(0, 3)}), std::invalid_argument);
}

TEST_CASE("adjacency view agrees with the edge list") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(9, 0.4, rng);
    int pairs = 0;
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = a + 1; b < g.order(); ++b) {
        const bool listed = std::find(g.edges().begin(), g.edges().end(), Edge(a, b)) != g.edges().end();
        CHECK(g.adjacent(a, b) == listed);
        CHECK(g.adjacent(b, a) == listed);
        CHECK((g.edge_id(a, b) != kNoEdge) == listed);
        pairs += listed;
      }
    CHECK(pairs == g.size());
  }
}

TEST_CASE("turan_graph examples") {
  const Graph c4 = turan_graph(4, 2);
  CHECK(c4.size() == 4);
  CHECK(is_isomorphic(c4, cycle_graph(4)));
  CHECK(turan_graph(3, 3) == complete_graph(3));
  const Graph t73 = turan_graph(7, 3);
  CHECK(turan_part_sizes(7, 3) == std::vector<int>{3, 2, 2});
  CHECK(t73.size() == 16);
  CHECK_THROWS_AS(turan_graph(5, 0), std::invalid_argument);
}

TEST_CASE("turan_number examples and closed form") {
  CHECK(turan_number(5, 3) == 6);
  CHECK(turan_number(4, 4) == 5);
  CHECK(turan_number(0, 3) == 0);
  for (int n = 0; n <= 100; ++n)
    CHECK(turan_number(n, 3) == n * n / 4);
  CHECK_THROWS(turan_number(5, 2));
}

TEST_CASE("Turán graph maximises edges among complete k-partite graphs") {
  // Every composition of n into k non-negative parts.
  for (int n = 0; n <= 8; ++n)
    for (int k = 1; k <= n + 1; ++k) {
      const std::int64_t turan = turan_graph(n, k).size();
      std::vector<int> sizes(static_cast<std::size_t>(k), 0);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k - 1) {
          sizes[static_cast<std::size_t>(i)] = left;
          CHECK(complete_multipartite(sizes).size() <= turan);
          return;
        }
        for (int s = 0; s <= left; ++s) {
          sizes[static_cast<std::size_t>(i)] = s;
          rec(i + 1, left - s);
        }
      };
      rec(0, n);
    }
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = oracle::relabel(g, perm);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(is_isomorphic(g, h));
  }
}

TEST_CASE("is_isomorphic agrees with the permutation oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph a = oracle::random_graph(6, 0.5, rng);
    const Graph b = oracle::random_graph(6, 0.5, rng);
    CHECK(is_isomorphic(a, b) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("enumerate_nonisomorphic class counts") {
  // Small orders against the brute-force oracle over all labelled graphs.
  for (int n = 0; n <= 5; ++n)
    CHECK(enumerate_nonisomorphic(n).size() == oracle::class_count(n));
  CHECK(enumerate_nonisomorphic(0).size() == 1);
  CHECK(enumerate_nonisomorphic(3).size() == 4);
  CHECK(enumerate_nonisomorphic(4).size() == 11);
  // Known sequence (OEIS A000088).
  const std::size_t known[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 6; n <= 8; ++n)
    CHECK(enumerate_nonisomorphic(n).size() == known[n]);
}

TEST_CASE("enumerate_nonisomorphic yields pairwise non-isomorphic graphs") {
  const GraphClass cls = enumerate_nonisomorphic(6);
  std::set<std::vector<bool>> codes;
  for (const Graph &g : cls.graphs)
    CHECK(codes.insert(oracle::min_code(g)).second);
  CHECK(codes.size() == 156);
}

TEST_CASE("enumeration contains every Turán graph") {
  for (int n = 1; n <= 7; ++n) {
    const GraphClass cls = enumerate_nonisomorphic(n);
    for (int k = 1; k <= n; ++k) {
      const Graph t = canonical_form(turan_graph(n, k));
      CHECK(std::find(cls.graphs.begin(), cls.graphs.end(), t) != cls.graphs.end());
    }
  }
}

TEST_CASE("enumeration ceiling") {
  CHECK_THROWS_AS(enumerate_nonisomorphic(9), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_nonisomorphic(5, 11), std::invalid_argument);
}

TEST_CASE("graph6 examples") {
  const Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.size() == 0);
  CHECK(write_graph6(Graph(0)) == "?");
  CHECK(write_graph6(complete_graph(2)) == "A_");
  CHECK(parse_graph6(write_graph6(complete_graph(2))) == complete_graph(2));
  // Standard encodings from the format description.
  CHECK(write_graph6(complete_graph(5)) == "D~{");
  CHECK(write_graph6(cycle_graph(5)) == "Dhc");
  CHECK(parse_graph6(">>graph6<<D~{\n") == complete_graph(5));
}

TEST_CASE("graph6 round trip") {
  for (int n = 0; n <= 6; ++n)
    for (const Graph &g : enumerate_nonisomorphic(n).graphs)
      CHECK(parse_graph6(write_graph6(g)) == g);
  std::mt19937_64 rng(9);
  for (int n : {5, 30, 62, 63, 64, 100}) {
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const std::string s = write_graph6(g);
    CHECK(parse_graph6(s) == g);
    CHECK(write_graph6(parse_graph6(s)) == s);
  }
}

TEST_CASE("graph6 parse errors name the offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  try {
    parse_graph6("D~");
    FAIL("expected length mismatch");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("length mismatch") != std::string::npos);
  }
  try {
    parse_graph6("D~ ");
    FAIL("expected range error");
  } catch (const ParseError &e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_graph6("~?"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError); // padding bits set
}

TEST_CASE("edge_induced relabels onto the support") {
  const Graph g(6, {Edge(1, 4), Edge(4, 5), Edge(1, 5), Edge(0, 2)});
  const std::vector<EdgeId> tri{g.edge_id(1, 4), g.edge_id(4, 5), g.edge_id(1, 5)};
  CHECK(g.edge_induced(tri) == complete_graph(3));
}
