#include "doctest.h"

#include "rainbow/errors.hpp"
#include "rainbow/report.hpp"

using namespace rainbow;

TEST_CASE("coloring JSON round trip") {
  const Graph k4 = complete_graph(4);
  const EdgeColoring chi = vizing_coloring(k4);
  const Json j = coloring_json(k4, chi);
  REQUIRE(j.size() == 6);
  CHECK(j[0].dump() == R"({"edge":[0,1],"color":)" + std::to_string(chi[0]) + "}");
  CHECK(coloring_from_json(k4, j) == chi);
  CHECK(coloring_from_json(k4, Json::parse(dump(j))) == chi);
}

TEST_CASE("coloring JSON errors") {
  const Graph k3 = complete_graph(3);
  CHECK_THROWS_AS(coloring_from_json(k3, Json::object()), ParseError);
  CHECK_THROWS_AS(coloring_from_json(k3, Json::parse(R"([{"edge":[0,1]}])")), ParseError);
  CHECK_THROWS_AS(coloring_from_json(k3, Json::parse(R"([{"edge":[0,5],"color":1}])")),
                  ParseError);
  CHECK_THROWS_AS(coloring_from_json(k3, Json::parse(R"([{"edge":[0,1],"color":0}])")),
                  ColoringError);
}

TEST_CASE("decomposition JSON shape") {
  const Graph k5 = complete_graph(5);
  const PhiResult r = phi(k5, HPattern::clique(3));
  const Json j = decomposition_json(k5, r.decomposition);
  CHECK(j["t"] == 6);
  CHECK(j["N"] == 2);
  CHECK(j["mode"] == "unrestricted");
  CHECK(j["copies"].size() == 2);
  CHECK(j["single_edges"].size() == 4);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"copies", "single_edges", "t", "N", "mode"});
  // Lexicographically smallest witness: triangles {0,1,2} and {0,3,4}.
  CHECK(j["copies"][0].dump() == "[[0,1],[0,2],[1,2]]");
  CHECK(j["copies"][1].dump() == "[[0,3],[0,4],[3,4]]");
}

TEST_CASE("reports serialise identically on repeat") {
  const ExtremalRecord a = phi_n_table(5, HPattern::clique(3), true);
  const ExtremalRecord b = phi_n_table(5, HPattern::clique(3), true);
  CHECK(dump(extremal_json(a)) == dump(extremal_json(b)));
  CHECK(dump(extremal_json(a)).back() == '\n');
  const std::vector<std::int64_t> ms{1, 2};
  CHECK(dump(bound_reports_json(edk_experiment(5, 3, ms))) ==
        dump(bound_reports_json(edk_experiment(5, 3, ms))));
}

TEST_CASE("census JSON") {
  const Graph k4 = complete_graph(4);
  const auto census = nonrainbow_census(k4, HPattern::clique(3), greedy_edge_coloring(k4));
  const Json j = census_json(census);
  REQUIRE(j.size() == 6);
  CHECK(j[0].dump() == R"({"edge":[0,1],"rainbow":2,"non_rainbow":0})");
}
