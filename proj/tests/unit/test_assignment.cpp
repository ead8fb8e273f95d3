#include <doctest.h>

#include <numeric>

#include "approx.hpp"
#include "ign/assignment.hpp"
#include "ign/baselines.hpp"
#include "ign/error.hpp"
#include "ign/random.hpp"
#include "oracles.hpp"

using namespace ign;

namespace {

Eigen::MatrixXd random_matrix(Rng& rng, Eigen::Index n, double lo = 0.0) {
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = lo + (1.0 - lo) * uniform01(rng);
  return m;
}

Eigen::MatrixXd random_permutation_matrix(Rng& rng, std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return permutation_matrix(p);
}

}  // namespace

TEST_CASE("cross normalization") {
  CHECK(cross_normalize(Eigen::MatrixXd::Ones(2, 2)).isApproxToConstant(1.0 / 3.0, 1e-15));
  Rng rng(1);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto p = random_permutation_matrix(rng, n);
    CHECK(cross_normalize(p) == p);
    CHECK(run_icn(p, Activation::sigmoid(5)).iterations == 0);
  }
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(2, 2);
  z(0, 0) = 1.0;
  CHECK_THROWS_AS(cross_normalize(z), NonNormalizable);
}

TEST_CASE("vec trick") {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto x = random_matrix(rng, static_cast<Eigen::Index>(n));
    const auto lhs = flatten(cross_normalize(x));
    const auto rhs = normalize(dual_adjacency(n), flatten(x));
    check_close(lhs, rhs, 1e-14);
  }
}

TEST_CASE("dual adjacency") {
  CHECK(dual_adjacency(1).size() == 1);
  CHECK(dual_adjacency(1).edge_count() == 0);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto c = dual_adjacency(n);
    CHECK(c.size() == n * n);
    CHECK(is_regular(c));
    CHECK(c.degree(0) == 2 * n - 2);
  }
  // node (i,j) sits at j*n+i: (0,0) and (1,0) share column 0
  CHECK(dual_adjacency(3)(0, 1));
  CHECK(dual_adjacency(3)(0, 3));
  CHECK_FALSE(dual_adjacency(3)(0, 4));
  // a permutation has density 2 in the dual graph
  Rng rng(3);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto p = random_permutation_matrix(rng, n);
    const auto s = NodeSet::from_threshold(flatten(p), 0.5);
    CHECK(classify_set(dual_adjacency(n), s) == SetClassification::MaximalIndependent);
    CHECK(density(dual_adjacency(n), s) == 2);
  }
}

TEST_CASE("permutation equivariance") {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const auto x = random_matrix(rng, static_cast<Eigen::Index>(n));
    const auto m = random_permutation_matrix(rng, n), k = random_permutation_matrix(rng, n);
    CHECK((cross_normalize(m * x * k) - m * cross_normalize(x) * k).cwiseAbs().maxCoeff() <= 1e-15);
  }
}

TEST_CASE("Sinkhorn-Knopp") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  const auto r = sinkhorn_knopp(d);
  CHECK(r.iterations == 1);
  CHECK(r.matrix.isIdentity(1e-15));
  const auto ds = sinkhorn_knopp(Eigen::MatrixXd::Constant(4, 4, 0.25));
  CHECK(ds.iterations == 0);
  CHECK(ds.converged);
  Rng rng(5);
  const auto x = random_matrix(rng, 8, 0.01);
  const auto s = sinkhorn_knopp(x);
  CHECK(s.converged);
  CHECK(is_doubly_stochastic(s.matrix, 1e-2));
  CHECK((s.matrix.array() > 0).all());
  Eigen::MatrixXd zero_row = Eigen::MatrixXd::Ones(3, 3);
  zero_row.row(1).setZero();
  CHECK_THROWS_AS(sinkhorn_knopp(zero_row), NonNormalizable);
  // zeros stay zeros
  Eigen::MatrixXd pattern = random_matrix(rng, 4, 0.1);
  pattern(0, 1) = pattern(2, 3) = 0.0;
  const auto sp = sinkhorn_knopp(pattern, 1e-6);
  CHECK(sp.matrix(0, 1) == 0.0);
  CHECK(sp.matrix(2, 3) == 0.0);
}

TEST_CASE("softassign") {
  Rng rng(6);
  const auto x = random_matrix(rng, 5);
  const auto warm = softassign(x, 1e6);
  CHECK(warm.matrix.isApproxToConstant(0.2, 1e-5));
  const auto cold = softassign(x, 0.01);
  CHECK(is_doubly_stochastic(cold.matrix, 1e-2));
  // 2x2 identity at tau = 0.1: odds ratio e^20, diagonal share 1/(1+e^-10)
  const auto two = softassign(Eigen::MatrixXd::Identity(2, 2), 0.1, 1e-12);
  CHECK(two.matrix(0, 0) > 0.99);
  CHECK(two.matrix(1, 1) > 0.99);
  CHECK(two.matrix(0, 0) == doctest::Approx(1.0 / (1.0 + std::exp(-10.0))));
  CHECK_THROWS_AS(softassign(x, 0.0), InvalidArgument);
  CHECK_THROWS_AS(softassign(Eigen::MatrixXd::Constant(2, 2, 8.0), 0.01), InvalidArgument);
}

TEST_CASE("threshold permutation and double stochasticity") {
  const auto id = Eigen::MatrixXd::Identity(3, 3);
  CHECK(is_doubly_stochastic(id, 1e-2));
  CHECK(*permutation_after_threshold(id) == Permutation{0, 1, 2});
  const auto uni = Eigen::MatrixXd::Constant(3, 3, 1.0 / 3.0);
  CHECK(is_doubly_stochastic(uni, 1e-2));
  CHECK_FALSE(permutation_after_threshold(uni).has_value());
  Eigen::MatrixXd m(2, 2);
  m << 0.9, 0.1, 0.2, 0.8;
  CHECK_FALSE(is_doubly_stochastic(m, 1e-2));
  CHECK(*permutation_after_threshold(m) == Permutation{0, 1});
  // two entries above 1/2 in one column is not a permutation
  m << 0.9, 0.1, 0.6, 0.3;
  CHECK_FALSE(permutation_after_threshold(m).has_value());
}

TEST_CASE("ICN") {
  Rng rng(7);
  SUBCASE("basin start recovers the dominant permutation monotonically") {
    for (std::size_t n = 2; n <= 8; ++n) {
      const double off = 1.0 / (4.0 * static_cast<double>(n) - 4.0);
      Permutation p(n);
      std::iota(p.begin(), p.end(), std::size_t{0});
      std::shuffle(p.begin(), p.end(), rng);
      // the basin statement is about images of the map, so start from one
      Eigen::MatrixXd y(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y(i, j) = p[i] == j ? 1.0 + uniform_open_closed(rng) : 0.1 * off * uniform_open_closed(rng);
      const Eigen::MatrixXd x = cross_normalize(y);
      REQUIRE(in_permutation_basin(x, p));
      Eigen::MatrixXd cur = x;
      for (int k = 0; k < 30; ++k) {
        const Eigen::MatrixXd next = cross_normalize(cur);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (p[i] == j) CHECK(next(i, j) >= cur(i, j));
            else CHECK(next(i, j) <= cur(i, j));
          }
        cur = next;
      }
      const auto r = run_icn(x, Activation::identity());
      CHECK(*r.permutation == p);
    }
  }
  SUBCASE("random 8x8 with sigmoid(5)") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_matrix(rng, 8);
      const auto r = run_icn(x, Activation::sigmoid(5));
      REQUIRE(r.permutation.has_value());
      CHECK(r.stop_reason == StopReason::ConvergedBinary);
      CHECK(permutation_weight(x, *r.permutation) <= hungarian(x).total + 1e-12);
      auto sorted = *r.permutation;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < 8; ++i) CHECK(sorted[i] == i);
    }
  }
  SUBCASE("no permutation") {
    // a constant matrix maps to the constant 1/(2n-1) and stays there (up to an ulp)
    StoppingCriteria short_run;
    short_run.max_iters = 50;
    const auto flat = run_icn(Eigen::MatrixXd::Ones(3, 3), Activation::identity(), short_run);
    CHECK_FALSE(flat.permutation.has_value());
    CHECK(flat.stop_reason == StopReason::SpeedOnly);
    CHECK(flat.iterations <= 50);
    CHECK(flat.final_matrix(1, 2) == doctest::Approx(0.2));
    StoppingCriteria one;
    one.max_iters = 1;
    const auto capped = run_icn(random_matrix(rng, 6), Activation::sigmoid(5), one);
    CHECK(capped.iterations == 1);
    CHECK(capped.stop_reason == (capped.permutation ? StopReason::ConvergedBinary : StopReason::MaxIters));
  }
}

TEST_CASE("padding and flattening") {
  Eigen::MatrixXd r(3, 2);
  r << 1, 2, 3, 4, 5, 6;
  const auto sq = pad_to_square(r);
  CHECK(sq.cols() == 3);
  CHECK(sq.col(2).isZero());
  CHECK(sq.leftCols(2) == r);
  const auto v = flatten(sq);
  CHECK(v[1] == 3.0);  // (1,0)
  CHECK(unflatten(v, 3) == sq);
  CHECK_THROWS_AS(unflatten(v, 2), InvalidArgument);
  CHECK_THROWS_AS(validate_weight_matrix(-Eigen::MatrixXd::Identity(2, 2)), InvalidArgument);
}
