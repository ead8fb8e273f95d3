#include <doctest.h>

#include "approx.hpp"
#include "ign/error.hpp"
#include "ign/graph.hpp"
#include "ign/random.hpp"
#include "oracles.hpp"

using namespace ign;

TEST_CASE("adjacency construction rejects malformed input") {
  CHECK_THROWS_AS(AdjacencyMatrix::from_rows({{0, 1}, {0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(AdjacencyMatrix::from_rows({{1, 0}, {0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(AdjacencyMatrix::from_rows({{0, 2}, {2, 0}}), InvalidArgument);
  AdjacencyMatrix a(3);
  CHECK_THROWS_AS(a.add_edge(1, 1), InvalidArgument);
  CHECK_THROWS_AS(a.add_edge(0, 3), InvalidArgument);
  const auto p3 = AdjacencyMatrix::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK(p3 == path_graph(3));
  CHECK(p3.edge_count() == 2);
  CHECK(p3.degree(1) == 2);
}

TEST_CASE("density on P3") {
  const auto p3 = path_graph(3);
  CHECK(density(p3, {0, 2}) == 2);
  CHECK(density(p3, {1}) == 1);
  CHECK(density(p3, {0}) == 0);
  CHECK(density(p3, {0, 1, 2}) == kDensityAllNodes);
}

TEST_CASE("classify_set on P3") {
  const auto p3 = path_graph(3);
  CHECK(classify_set(p3, {0, 2}) == SetClassification::MaximalIndependent);
  CHECK(classify_set(p3, {0, 1}) == SetClassification::NotIndependent);
  CHECK(classify_set(p3, {0}) == SetClassification::IndependentNonMaximal);
  CHECK(classify_set(p3, {}) == SetClassification::IndependentNonMaximal);
}

TEST_CASE("maximal iff independent with density >= 1") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = gen_gnp(6, 0.4, rng());
    const auto s = NodeSet::from_mask(rng() & 63U, 6);
    const auto c = classify_set(g.adjacency, s);
    const bool independent = c != SetClassification::NotIndependent;
    CHECK((c == SetClassification::MaximalIndependent) == (independent && density(g.adjacency, s) >= 1));
  }
}

TEST_CASE("is_normalizable") {
  const auto p3 = path_graph(3);
  CHECK(is_normalizable(p3, Vector{1, 1, 1}));
  CHECK_FALSE(is_normalizable(p3, Vector{1, 0, 0}));
  CHECK(is_normalizable(p3, Vector{0, 1, 0}));
  // agrees with the density of the support, and ignores positive scaling
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = gen_gnp(7, 0.3, rng());
    Vector x(7);
    for (auto& v : x) v = (rng() % 3 == 0) ? 0.0 : uniform_open_closed(rng);
    const auto supp = NodeSet::support(x);
    const bool by_density = supp.size() == 7 || density(g.adjacency, supp) > 0;
    CHECK(is_normalizable(g.adjacency, x) == by_density);
    Vector scaled = x;
    for (auto& v : scaled) v *= 3.7;
    CHECK(is_normalizable(g.adjacency, scaled) == is_normalizable(g.adjacency, x));
  }
}

TEST_CASE("induced_subgraph") {
  const WeightedGraph g(path_graph(3), {0.1, 0.2, 0.3});
  const auto e = induced_subgraph(g, {0, 1});
  CHECK(e.adjacency == complete_graph(2));
  check_close(e.weights, Vector{0.1, 0.2}, 0.0);
  const auto f = induced_subgraph(g, {0, 2});
  CHECK(f.adjacency == AdjacencyMatrix(2));
  check_close(f.weights, Vector{0.1, 0.3}, 0.0);
  const WeightedGraph k4(complete_graph(4), {1, 2, 3, 4});
  const auto k3 = induced_subgraph(k4, {0, 1, 2});
  CHECK(k3.adjacency == complete_graph(3));
  check_close(k3.weights, Vector{1, 2, 3}, 0.0);
  CHECK_THROWS_AS(induced_subgraph(g, {}), InvalidArgument);
}

TEST_CASE("gen_gnp") {
  const auto empty = gen_gnp(5, 0.0, 1);
  CHECK(empty.adjacency.edge_count() == 0);
  const auto full = gen_gnp(5, 1.0, 1);
  CHECK(full.adjacency == complete_graph(5));
  for (double w : full.weights) CHECK((w > 0.0 && w <= 1.0));
  for (std::uint64_t seed : {11u, 12u}) {
    const auto g = gen_gnp(100, 0.5, seed);
    const double d = static_cast<double>(g.adjacency.edge_count()) / (100.0 * 99.0 / 2.0);
    CHECK(std::abs(d - 0.5) <= 0.15);
  }
  CHECK(gen_gnp(20, 0.3, 5).adjacency == gen_gnp(20, 0.3, 5).adjacency);
  CHECK(gen_gnp(20, 0.3, 5).weights == gen_gnp(20, 0.3, 5).weights);
  CHECK_THROWS_AS(gen_gnp(5, 1.5, 1), InvalidArgument);
  CHECK_THROWS_AS(gen_gnp(0, 0.5, 1), InvalidArgument);
}

TEST_CASE("maximal_independent_sets agrees with subset enumeration") {
  Rng rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = gen_gnp(8, 0.35, rng());
    std::vector<NodeSet> want;
    for (std::uint64_t m = 0; m < 256; ++m) {
      const auto s = NodeSet::from_mask(m, 8);
      if (classify_set(g.adjacency, s) == SetClassification::MaximalIndependent) want.push_back(s);
    }
    auto got = maximal_independent_sets(g.adjacency);
    auto key = [](const NodeSet& s) { return s.members(); };
    std::sort(want.begin(), want.end(), [&](const NodeSet& l, const NodeSet& r) { return key(l) < key(r); });
    std::sort(got.begin(), got.end(), [&](const NodeSet& l, const NodeSet& r) { return key(l) < key(r); });
    CHECK(got == want);
  }
}

TEST_CASE("structure helpers") {
  CHECK(is_tree(path_graph(5)));
  CHECK(is_tree(star_graph(4)));
  CHECK_FALSE(is_tree(cycle_graph(4)));
  CHECK(is_regular(cycle_graph(5)));
  CHECK(is_regular(complete_graph(4)));
  CHECK_FALSE(is_regular(path_graph(3)));
  CHECK(min_degree(star_graph(5)) == 1);
  CHECK(max_degree(star_graph(5)) == 4);
  CHECK(is_connected(AdjacencyMatrix(1)));
  CHECK_FALSE(is_connected(AdjacencyMatrix(2)));
  CHECK(oracle::connected(oracle::dense(cycle_graph(6))));
}

TEST_CASE("NodeSet helpers") {
  const Vector x{0.7, 0.5, 0.49, 0.0};
  CHECK(NodeSet::from_threshold(x, 0.5) == NodeSet{0, 1});
  CHECK(NodeSet::support(x) == NodeSet{0, 1, 2});
  CHECK(NodeSet::support(x, 0.6) == NodeSet{0});
  CHECK(NodeSet({3, 1, 3}) == NodeSet{1, 3});
  CHECK(NodeSet{0, 2}.indicator(3) == Vector{1, 0, 1});
}
