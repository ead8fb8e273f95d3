#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ign/activation.hpp"
#include "ign/graph.hpp"

namespace ign {

/// Jacobian of x -> h(normalize(A, x)): J = H(x) (W(x) - diag(x) A), where
/// H_ii = h'(N_i(x)) / ((A+I)x)_i^2 and W_ii = (Ax)_i.
using JacobianMatrix = Eigen::MatrixXd;

/// Closed-form Jacobian. Throws NonNormalizable.
JacobianMatrix jacobian(const AdjacencyMatrix& a, std::span<const double> x, const Activation& h);

/// Moduli of the eigenvalues of a dense (nonsymmetric) matrix, ascending.
std::vector<double> eigenvalue_moduli(const Eigen::MatrixXd& m);

struct MisSpectrum {
  /// Eigenvalue multiset of J(ind(S)), ascending: |S| zeros plus
  /// h'(0) / |N(i) ∩ S| for every i outside S.
  std::vector<double> spectrum;
  /// h'(0) / density(A, S).
  double radius = 0.0;
};

/// Analytic spectrum at a maximal independent set. Throws NotMaximalIndependent.
MisSpectrum mis_spectral_radius(const AdjacencyMatrix& a, const NodeSet& s, const Activation& h);

/// Sufficient condition for monotone convergence of plain normalization to
/// ind(S): x_i > 1/2 on S and x_i < 1/(2 d_S) off S, d_S = max degree over S.
/// Requires S maximal independent (NotMaximalIndependent) with density >= 2
/// (InsufficientDensity). The guarantee assumes x is itself a normalization
/// image.
bool in_fast_basin(const AdjacencyMatrix& a, const NodeSet& s, std::span<const double> x);

struct Ql1Result {
  double lhs = 0.0;  ///< y^T (A+I) y
  double rhs = 0.0;  ///< ||y||_1
  bool holds = false;
};

/// Quadratic-versus-L1 inequality at y = normalize(A, x). Requires a connected
/// graph and strictly positive x.
Ql1Result check_ql1(const AdjacencyMatrix& a, std::span<const double> x);

/// uvw + uw - u - v - w + 1: zero exactly on the image of plain normalization
/// of the 3-node path.
double taco_residual(double u, double v, double w);

/// Runs `iters` plain normalization steps from x0 and checks that ||x^k||_1
/// never decreases (1e-12 slack) for k >= 1 and strictly increases whenever the
/// step moved by more than 1e-13. The iteration runs in quad precision (long
/// double without compiler support). Requires a connected graph and x0 > 0.
bool l1_monotonicity_check(const AdjacencyMatrix& a, std::span<const double> x0, std::size_t iters);

/// Monte-Carlo injectivity check on a tree: for `trials` random positive pairs,
/// both L1-normalized, the normalization images must differ by more than 1e-9
/// in max norm. Returns false on any counterexample. Throws on non-trees.
bool tree_injectivity_probe(const AdjacencyMatrix& tree, std::size_t trials, std::uint64_t seed);

}  // namespace ign
