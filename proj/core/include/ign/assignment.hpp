#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ign/activation.hpp"
#include "ign/dynamics.hpp"
#include "ign/graph.hpp"

namespace ign {

/// Square, finite, nonnegative weight matrix of an assignment problem.
using WeightMatrix = Eigen::MatrixXd;
using Permutation = std::vector<std::size_t>;

/// Throws InvalidArgument unless x is square, finite and nonnegative.
void validate_weight_matrix(const WeightMatrix& x);

/// Pads an n x m matrix (m < n) with n - m zero columns; square input is returned as is.
WeightMatrix pad_to_square(const Eigen::MatrixXd& x);

/// Entry (i,j) divided by rowsum_i + colsum_j - x_ij. Throws NonNormalizable
/// when some cross sum vanishes.
WeightMatrix cross_normalize(const WeightMatrix& x);

/// Adjacency of the n^2 "edge" nodes of K_{n,n}: node (i,j), flattened to
/// j*n + i, is adjacent to every other node of row i and of column j. The
/// graph is (2n-2)-regular.
AdjacencyMatrix dual_adjacency(std::size_t n);

/// Column-stacking vectorization (index j*n + i) and its inverse.
Vector flatten(const Eigen::MatrixXd& x);
Eigen::MatrixXd unflatten(std::span<const double> v, std::size_t n);

WeightMatrix row_normalize(const WeightMatrix& x);
WeightMatrix column_normalize(const WeightMatrix& x);

struct SinkhornResult {
  WeightMatrix matrix;
  /// Full row-then-column rounds performed.
  std::size_t iterations = 0;
  bool converged = false;
};

/// Alternating row/column normalization until every row and column sum is
/// within tol of 1 (checked on entry and after each column pass) or max_iters
/// rounds have run. Throws NonNormalizable on a zero row or column.
SinkhornResult sinkhorn_knopp(const WeightMatrix& x, double tol = 1e-2, std::size_t max_iters = 100000);

/// Exponent bound of the softassign overflow guard.
inline constexpr double kMaxSoftassignExponent = 700.0;

/// sinkhorn_knopp(exp(x / tau)). Throws InvalidArgument when tau <= 0 or
/// max x_ij / tau exceeds kMaxSoftassignExponent.
SinkhornResult softassign(const WeightMatrix& x, double tau, double tol = 1e-2, std::size_t max_iters = 100000);

bool is_doubly_stochastic(const WeightMatrix& x, double tol);

/// The permutation read from {x_ij >= 1/2}, if that pattern has exactly one
/// entry per row and per column.
std::optional<Permutation> permutation_after_threshold(const WeightMatrix& x);

Eigen::MatrixXd permutation_matrix(const Permutation& p);
double permutation_weight(const Eigen::MatrixXd& x, const Permutation& p);

/// Fast-basin test of a permutation: x_{i,p(i)} > 1/2 and every other entry
/// below 1/(4n-4).
bool in_permutation_basin(const WeightMatrix& x, const Permutation& p);

struct AssignmentReport {
  WeightMatrix final_matrix;
  /// Present iff thresholding final_matrix at 1/2 gives a permutation.
  std::optional<Permutation> permutation;
  std::size_t iterations = 0;
  StopReason stop_reason = StopReason::MaxIters;
  /// A cross sum vanished mid-run; final_matrix is the offending iterate.
  bool non_normalizable = false;
};

/// Iterative cross normalization: x <- h(cross_normalize(x)) until
/// thresholding at 1/2 yields a permutation (checked before the first step
/// too) or max_iters steps have run. Without a permutation the result is
/// SpeedOnly if the last step moved by at most stop.epsilon, else MaxIters; an
/// iterate that repeats exactly ends the run early as SpeedOnly.
AssignmentReport run_icn(const WeightMatrix& x, const Activation& h, const StoppingCriteria& stop = {});

}  // namespace ign
