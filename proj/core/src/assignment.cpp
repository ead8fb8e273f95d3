#include "ign/assignment.hpp"

#include <cmath>
#include <limits>

#include "ign/error.hpp"

namespace ign {

namespace {

using Index = Eigen::Index;

bool within(const Eigen::VectorXd& sums, double tol) { return ((sums.array() - 1.0).abs() <= tol).all(); }

void require_nonzero(const Eigen::VectorXd& sums, const char* what) {
  for (Index k = 0; k < sums.size(); ++k)
    if (!(sums(k) >= kMinDenominator)) throw NonNormalizable(std::string("zero ") + what);
}

}  // namespace

void validate_weight_matrix(const WeightMatrix& x) {
  if (x.rows() != x.cols()) throw InvalidArgument("weight matrix must be square");
  if (!x.allFinite()) throw InvalidArgument("weight matrix must be finite");
  if ((x.array() < 0.0).any()) throw InvalidArgument("weight matrix must be nonnegative");
}

WeightMatrix pad_to_square(const Eigen::MatrixXd& x) {
  if (x.cols() > x.rows()) throw InvalidArgument("pad_to_square expects at most as many columns as rows");
  WeightMatrix out = WeightMatrix::Zero(x.rows(), x.rows());
  out.leftCols(x.cols()) = x;
  return out;
}

WeightMatrix cross_normalize(const WeightMatrix& x) {
  const Eigen::VectorXd rows = x.rowwise().sum();
  const Eigen::RowVectorXd cols = x.colwise().sum();
  WeightMatrix out(x.rows(), x.cols());
  for (Index j = 0; j < x.cols(); ++j) {
    for (Index i = 0; i < x.rows(); ++i) {
      const double d = rows(i) + cols(j) - x(i, j);
      if (!(d >= kMinDenominator))
        throw NonNormalizable("cross sum of entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is zero");
      out(i, j) = x(i, j) / d;
    }
  }
  return out;
}

AdjacencyMatrix dual_adjacency(std::size_t n) {
  AdjacencyMatrix a(n * n);
  auto node = [n](std::size_t i, std::size_t j) { return j * n + i; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) a.add_edge(node(i, j), node(i, k));  // same row
      for (std::size_t k = i + 1; k < n; ++k) a.add_edge(node(i, j), node(k, j));  // same column
    }
  }
  return a;
}

Vector flatten(const Eigen::MatrixXd& x) {
  Vector v(static_cast<std::size_t>(x.size()));
  Eigen::Map<Eigen::MatrixXd>(v.data(), x.rows(), x.cols()) = x;  // column major
  return v;
}

Eigen::MatrixXd unflatten(std::span<const double> v, std::size_t n) {
  if (v.size() != n * n) throw InvalidArgument("unflatten: size is not n^2");
  const auto ni = static_cast<Index>(n);
  return Eigen::Map<const Eigen::MatrixXd>(v.data(), ni, ni);
}

WeightMatrix row_normalize(const WeightMatrix& x) {
  const Eigen::VectorXd rows = x.rowwise().sum();
  require_nonzero(rows, "row");
  return rows.cwiseInverse().asDiagonal() * x;
}

WeightMatrix column_normalize(const WeightMatrix& x) {
  const Eigen::VectorXd cols = x.colwise().sum().transpose();
  require_nonzero(cols, "column");
  return x * cols.cwiseInverse().asDiagonal();
}

bool is_doubly_stochastic(const WeightMatrix& x, double tol) {
  return within(x.rowwise().sum(), tol) && within(x.colwise().sum().transpose(), tol);
}

SinkhornResult sinkhorn_knopp(const WeightMatrix& x, double tol, std::size_t max_iters) {
  validate_weight_matrix(x);
  if (!(tol > 0.0)) throw InvalidArgument("sinkhorn tolerance must be > 0");
  SinkhornResult r{x, 0, false};
  require_nonzero(r.matrix.rowwise().sum(), "row");
  require_nonzero(r.matrix.colwise().sum().transpose(), "column");
  if (is_doubly_stochastic(r.matrix, tol)) {
    r.converged = true;
    return r;
  }
  while (r.iterations < max_iters) {
    r.matrix = column_normalize(row_normalize(r.matrix));
    ++r.iterations;
    if (is_doubly_stochastic(r.matrix, tol)) {
      r.converged = true;
      break;
    }
  }
  return r;
}

SinkhornResult softassign(const WeightMatrix& x, double tau, double tol, std::size_t max_iters) {
  validate_weight_matrix(x);
  if (!(tau > 0.0)) throw InvalidArgument("softassign temperature must be > 0");
  if (x.size() > 0 && x.maxCoeff() / tau > kMaxSoftassignExponent)
    throw InvalidArgument("softassign overflow guard: max x / tau exceeds 700");
  return sinkhorn_knopp((x.array() / tau).exp().matrix(), tol, max_iters);
}

std::optional<Permutation> permutation_after_threshold(const WeightMatrix& x) {
  if (x.rows() != x.cols()) throw InvalidArgument("weight matrix must be square");
  const auto n = static_cast<std::size_t>(x.rows());
  Permutation p(n, n);
  std::vector<bool> col_used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x(static_cast<Index>(i), static_cast<Index>(j)) >= kRoundingThreshold) {
        if (p[i] != n || col_used[j]) return std::nullopt;
        p[i] = j;
        col_used[j] = true;
      }
    }
    if (p[i] == n) return std::nullopt;
  }
  return p;
}

Eigen::MatrixXd permutation_matrix(const Permutation& p) {
  const auto n = static_cast<Index>(p.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < p.size(); ++i) m(static_cast<Index>(i), static_cast<Index>(p[i])) = 1.0;
  return m;
}

double permutation_weight(const Eigen::MatrixXd& x, const Permutation& p) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += x(static_cast<Index>(i), static_cast<Index>(p[i]));
  return total;
}

bool in_permutation_basin(const WeightMatrix& x, const Permutation& p) {
  const auto n = static_cast<std::size_t>(x.rows());
  if (x.cols() != x.rows() || p.size() != n) throw InvalidArgument("matrix and permutation sizes differ");
  const double off_bound = n > 1 ? 1.0 / (4.0 * static_cast<double>(n) - 4.0) : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = x(static_cast<Index>(i), static_cast<Index>(j));
      if (p[i] == j ? !(v > 0.5) : !(v < off_bound)) return false;
    }
  }
  return true;
}

AssignmentReport run_icn(const WeightMatrix& x, const Activation& h, const StoppingCriteria& stop) {
  stop.validate();
  validate_weight_matrix(x);
  AssignmentReport r;
  r.final_matrix = x;
  r.permutation = permutation_after_threshold(x);
  if (r.permutation) {
    r.stop_reason = StopReason::ConvergedBinary;
    return r;
  }
  WeightMatrix next;
  double speed = std::numeric_limits<double>::infinity();
  while (r.iterations < stop.max_iters) {
    try {
      next = cross_normalize(r.final_matrix);
    } catch (const NonNormalizable&) {
      r.non_normalizable = true;
      r.stop_reason = StopReason::MaxIters;
      return r;
    }
    if (!h.is_identity()) next = next.unaryExpr([&h](double v) { return h.value(v); });
    speed = (next - r.final_matrix).cwiseAbs().maxCoeff();
    r.final_matrix.swap(next);
    ++r.iterations;
    r.permutation = permutation_after_threshold(r.final_matrix);
    if (r.permutation) {
      r.stop_reason = StopReason::ConvergedBinary;
      return r;
    }
    // Slow is not stuck: rows of tiny entries can still sort themselves out
    // after the speed has dropped below epsilon. Only an exact repeat ends early.
    if (speed == 0.0) break;
  }
  r.stop_reason = speed <= stop.epsilon ? StopReason::SpeedOnly : StopReason::MaxIters;
  return r;
}

}  // namespace ign
