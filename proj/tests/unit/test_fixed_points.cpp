#include <doctest.h>

#include <algorithm>

#include "approx.hpp"
#include "ign/dynamics.hpp"
#include "ign/enumerate.hpp"
#include "ign/error.hpp"
#include "ign/fixed_points.hpp"

using namespace ign;

TEST_CASE("find_fixed_cluster examples") {
  const auto k2 = find_fixed_cluster(complete_graph(2));
  REQUIRE(k2.has_value());
  check_close(k2->weights, Vector{0.5, 0.5}, 1e-12);
  CHECK(k2->min_weight == doctest::Approx(0.5));
  CHECK_FALSE(find_fixed_cluster(path_graph(3)).has_value());
  const auto c4 = find_fixed_cluster(cycle_graph(4));
  REQUIRE(c4.has_value());
  check_close(c4->weights, Vector(4, 1.0 / 3.0), 1e-12);
  CHECK(c4->residual <= 1e-12);
  CHECK_THROWS_AS(find_fixed_cluster(AdjacencyMatrix(2)), InvalidArgument);
  CHECK(find_fixed_cluster(AdjacencyMatrix(1)).has_value());
}

TEST_CASE("stage two prefers interior points") {
  // C6 has the family (a, a, b, a, a, b) with 2a + b = 1; the max-min point is 1/3 everywhere.
  const auto c6 = find_fixed_cluster(cycle_graph(6));
  REQUIRE(c6.has_value());
  check_close(c6->weights, Vector(6, 1.0 / 3.0), 1e-12);
}

TEST_CASE("verify_fixed_cluster") {
  const double a = 0.3;
  CHECK(verify_fixed_cluster(cycle_graph(6), Vector{a, a, 0.4, a, a, 0.4}));
  CHECK_FALSE(verify_fixed_cluster(cycle_graph(6), Vector{a, a, 0.5, a, a, 0.5}));
  CHECK_FALSE(verify_fixed_cluster(path_graph(3), Vector{1, 0, 1}));
  CHECK(verify_fixed_cluster(AdjacencyMatrix(1), Vector{1}));
}

TEST_CASE("regular clusters") {
  AdjacencyMatrix cube(8);  // 3-regular
  for (std::size_t v = 0; v < 8; ++v)
    for (std::size_t bit : {1u, 2u, 4u})
      if (v < (v ^ bit)) cube.add_edge(v, v ^ bit);
  for (const auto& g : {complete_graph(5), cycle_graph(7), cube}) {
    const auto cert = regular_fixed_cluster(g);
    const double want = 1.0 / static_cast<double>(g.degree(0) + 1);
    check_close(cert.weights, Vector(g.size(), want), 0.0);
    CHECK(verify_fixed_cluster(g, cert.weights));
    const auto lp = find_fixed_cluster(g);
    REQUIRE(lp.has_value());
    check_close(lp->weights, cert.weights, 1e-9);
  }
  CHECK_THROWS_AS(regular_fixed_cluster(path_graph(3)), InvalidArgument);
}

TEST_CASE("isolated clusters") {
  CHECK(is_isolated_fixed_cluster(complete_graph(2)) == false);  // A+I singular: the segment (a, 1-a)
  CHECK(is_isolated_fixed_cluster(cycle_graph(5)));
  CHECK_FALSE(is_isolated_fixed_cluster(cycle_graph(6)));
  CHECK_FALSE(is_isolated_fixed_cluster(path_graph(3)));
}

TEST_CASE("census") {
  const auto r = census(1, 6);
  REQUIRE(r.counts.size() == 6);
  for (const auto& c : r.counts)
    if (c.size <= 4) CHECK(c.certified == 0);
  CHECK(r.counts[4].connected == 21);
  CHECK(r.counts[5].connected == 112);
  for (const auto& e : r.entries) {
    CHECK(min_degree(e.graph) >= 2);
    CHECK_FALSE(is_regular(e.graph));
    if (!e.certified) continue;
    CHECK(verify_fixed_cluster(e.graph, e.weights));
    // non-isolated clusters sit in a flat family and can drift off under roundoff
    if (e.isolated) CHECK(fixed_point_drift(e.graph, e.weights, 100) <= 1e-8);
    // all-equal weights would force regularity
    const auto [lo, hi] = std::minmax_element(e.weights.begin(), e.weights.end());
    CHECK(*hi - *lo > 1e-9);
  }
  // isolated implies certified
  for (const auto& e : r.entries)
    if (e.isolated) CHECK(e.certified);
  CHECK_THROWS_AS(census(1, 8), SizeLimitExceeded);
  CHECK_THROWS_AS(census(3, 2), InvalidArgument);
}

TEST_CASE("no certified cluster has a degree-1 node besides K2") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) {
      if (min_degree(g) != 1) continue;
      CAPTURE(code_string(adjacency_code(g), n));
      CHECK(find_fixed_cluster(g).has_value() == (n == 2));
    }
}

TEST_CASE("census CSV") {
  const auto csv = census_csv(census(5, 5));
  CHECK(csv.rfind("size,code,certified,weights,residual,isolated\n", 0) == 0);
  CHECK(csv.find(';') != std::string::npos);
}
