#include <sstream>

#include "doctest.h"
#include "fusscat/counting.hpp"
#include "fusscat/errors.hpp"
#include "fusscat/oracle.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace fusscat;

TEST_CASE("histogram reproduces the level by outdegree table for d=3, n=3") {
  const auto h = vertex_histogram(3, 3);
  const int want[4][4] = {{0, 15, 6, 1}, {66, 21, 3, 0}, {72, 9, 0, 0}, {27, 0, 0, 0}};
  for (int l = 0; l <= 3; ++l) {
    for (int k = 0; k <= 3; ++k) CHECK(brute_count_exact(h, k, l) == want[l][k]);
  }
  CHECK(h.total() == 220);
}

TEST_CASE("histogram of a single edge") {
  const auto h = vertex_histogram(1, 1);
  REQUIRE(h.cells.size() == 2);
  CHECK(h.cells.at(HistKey{0, 1, 0, 0}) == 1);
  CHECK(h.cells.at(HistKey{1, 0, 0, 0}) == 1);
}

TEST_CASE("histogram mass and ranges") {
  CHECK(vertex_histogram(2, 2).total() == 15);
  for (int d = 1; d <= 3; ++d) {
    for (int n = 0; n <= 4; ++n) {
      const auto h = vertex_histogram(d, n);
      CHECK(h.total() == Count(d * n + 1) * Count(support::tree_counts(d, n)[n]));
      for (const auto& [key, count] : h.cells) {
        CHECK(key.level <= n);
        CHECK(key.outdegree <= n);
      }
    }
  }
}

TEST_CASE("brute counts") {
  CHECK(brute_count_atleast(vertex_histogram(3, 3), 1, 2) == 9);
  CHECK(brute_count_refined(vertex_histogram(2, 2), 1, 0, 0, 1) == 7);
  CHECK(brute_count_exact(vertex_histogram(3, 3), 0, 1) == 66);
  const auto h1 = vertex_histogram(1, 2);
  CHECK(brute_count_atleast(h1, 0, 1) == 4);
  CHECK(brute_count_refined(h1, 0, 1, 0, 1) == 1);
  CHECK(brute_count_refined(vertex_histogram(2, 2), 2, 0, 0, 1) == 2);
  CHECK(brute_count_refined(vertex_histogram(3, 3), 0, 0, 3, 1) == 33);
  CHECK(brute_count_atleast(vertex_histogram(1, 3), 2, 1) == 1);
}

TEST_CASE("oracle agrees with the closed forms") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const auto h = vertex_histogram(d, n);
      for (int k = 0; k <= n; ++k) {
        for (int l = 0; l <= n; ++l) {
          CHECK(brute_count_atleast(h, k, l) == count_atleast(d, n, k, l));
          CHECK(brute_count_exact(h, k, l) == count_exact(d, n, k, l));
        }
      }
    }
  }
}

TEST_CASE("serialisation") {
  const auto h = vertex_histogram(1, 1);
  CHECK(histogram_csv(h) == "level,outdegree,elders,youngers,count\n0,1,0,0,1\n1,0,0,0,1\n");
  const auto j = nlohmann::json::parse(histogram_json(h));
  CHECK(j["total"] == "2");
  CHECK(j["cells"].size() == 2);
  CHECK(j["cells"][0]["outdegree"] == 1);
}

TEST_CASE("oracle cap counts tree-vertex pairs") {
  CHECK_THROWS_AS(vertex_histogram(3, 3, ResourceCap{219}), InstanceTooLarge);
  CHECK_NOTHROW(vertex_histogram(3, 3, ResourceCap{220}));
}
