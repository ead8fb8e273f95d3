#include "ign/fixed_points.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "ign/dynamics.hpp"
#include "ign/enumerate.hpp"
#include "ign/error.hpp"
#include "ign/parallel.hpp"
#include "ign/simplex.hpp"

namespace ign {

namespace {

using Index = Eigen::Index;

Eigen::MatrixXd shifted_adjacency(const AdjacencyMatrix& a) {
  const auto n = static_cast<Index>(a.size());
  Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);
  for (auto [i, j] : a.edges()) {
    b(static_cast<Index>(i), static_cast<Index>(j)) = 1.0;
    b(static_cast<Index>(j), static_cast<Index>(i)) = 1.0;
  }
  return b;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

double cluster_residual(const AdjacencyMatrix& a, std::span<const double> x) {
  if (x.size() != a.size()) throw InvalidArgument("weight vector length differs from node count");
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = x[i];
    for (std::size_t j : a.neighbors(i)) s += x[j];
    r = std::max(r, std::abs(s - 1.0));
  }
  return r;
}

std::optional<FixedClusterCertificate> find_fixed_cluster(const AdjacencyMatrix& a) {
  if (a.size() == 0 || !is_connected(a)) throw InvalidArgument("find_fixed_cluster needs a connected graph");
  const auto n = static_cast<Index>(a.size());
  const Eigen::MatrixXd b = shifted_adjacency(a);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);

  // Stage 1: variables (x, y).
  LinearProgram feas = LinearProgram::with_variables(2 * n);
  feas.objective.tail(n).setOnes();
  feas.eq_matrix.resize(n, 2 * n);
  feas.eq_matrix << b, Eigen::MatrixXd::Identity(n, n);
  feas.eq_rhs = ones;
  const LpResult r1 = simplex_solve(feas);
  if (r1.status != LpStatus::Optimal || *r1.objective > 1e-9) return std::nullopt;

  // Stage 2: variables (x, t); t - x_i <= 0.
  LinearProgram inner = LinearProgram::with_variables(n + 1);
  inner.sense = ObjectiveSense::Maximize;
  inner.objective(n) = 1.0;
  inner.eq_matrix = Eigen::MatrixXd::Zero(n, n + 1);
  inner.eq_matrix.leftCols(n) = b;
  inner.eq_rhs = ones;
  inner.ub_matrix = Eigen::MatrixXd::Zero(n, n + 1);
  inner.ub_matrix.leftCols(n) = -Eigen::MatrixXd::Identity(n, n);
  inner.ub_matrix.col(n).setOnes();
  inner.ub_rhs = Eigen::VectorXd::Zero(n);
  const LpResult r2 = simplex_solve(inner);
  if (r2.status != LpStatus::Optimal || !(*r2.objective > kStrictPositivity)) return std::nullopt;

  FixedClusterCertificate cert;
  cert.graph = a;
  const Eigen::VectorXd& sol = *r2.solution;
  cert.weights.assign(sol.data(), sol.data() + n);
  cert.residual = cluster_residual(a, cert.weights);
  cert.min_weight = *std::min_element(cert.weights.begin(), cert.weights.end());
  return cert;
}

bool verify_fixed_cluster(const AdjacencyMatrix& a, std::span<const double> x) {
  if (x.size() != a.size()) throw InvalidArgument("weight vector length differs from node count");
  for (double v : x)
    if (!(v > kStrictPositivity)) return false;
  if (!(cluster_residual(a, x) <= kClusterResidualTol)) return false;
  const Vector next = step(a, x, Activation::identity());
  return max_abs_diff(next, x) <= 1e-9;
}

FixedClusterCertificate regular_fixed_cluster(const AdjacencyMatrix& a) {
  if (a.size() == 0 || !is_regular(a)) throw InvalidArgument("regular_fixed_cluster needs a regular graph");
  const double v = 1.0 / static_cast<double>(a.degree(0) + 1);
  FixedClusterCertificate cert{a, Vector(a.size(), v), 0.0, v};
  cert.residual = cluster_residual(a, cert.weights);
  return cert;
}

bool is_isolated_fixed_cluster(const AdjacencyMatrix& a) {
  const auto n = static_cast<Index>(a.size());
  if (n == 0) return false;
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(shifted_adjacency(a));
  if (lu.rank() < n) return false;
  const Eigen::VectorXd x = lu.solve(Eigen::VectorXd::Ones(n));
  return (x.array() > kStrictPositivity).all();
}

double fixed_point_drift(const AdjacencyMatrix& a, std::span<const double> x, std::size_t steps) {
  Vector cur(x.begin(), x.end()), next(x.size());
  const Activation id = Activation::identity();
  double drift = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    step_into(a, cur, id, next);
    cur.swap(next);
    drift = std::max(drift, max_abs_diff(cur, x));
  }
  return drift;
}

CensusResult census(std::size_t n_min, std::size_t n_max, std::size_t workers) {
  if (n_min < 1 || n_min > n_max) throw InvalidArgument("census needs 1 <= n_min <= n_max");
  if (n_max > kMaxEnumerationNodes)
    throw SizeLimitExceeded("census is limited to " + std::to_string(kMaxEnumerationNodes) + " nodes");
  CensusResult out;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const auto graphs = enumerate_connected_graphs(n);
    CensusCount count{n, graphs.size(), 0, 0, 0};
    std::vector<AdjacencyMatrix> candidates;
    for (const auto& g : graphs)
      if (!is_regular(g) && min_degree(g) >= 2) candidates.push_back(g);
    count.candidates = candidates.size();

    std::vector<CensusEntry> entries(candidates.size());
    parallel_for(
        candidates.size(),
        [&](std::size_t k) {
          const auto& g = candidates[k];
          CensusEntry& e = entries[k];
          e.size = n;
          e.code = code_string(adjacency_code(g), n);
          e.graph = g;
          e.isolated = is_isolated_fixed_cluster(g);
          if (auto cert = find_fixed_cluster(g)) {
            e.certified = true;
            e.weights = std::move(cert->weights);
            e.residual = cert->residual;
          }
        },
        workers);
    for (const auto& e : entries) {
      count.certified += e.certified ? 1 : 0;
      count.isolated += e.isolated ? 1 : 0;
    }
    out.counts.push_back(count);
    out.entries.insert(out.entries.end(), std::make_move_iterator(entries.begin()),
                       std::make_move_iterator(entries.end()));
  }
  return out;
}

std::string census_csv(const CensusResult& r) {
  std::ostringstream os;
  os << "size,code,certified,weights,residual,isolated\n";
  for (const auto& e : r.entries) {
    os << e.size << ',' << e.code << ',' << (e.certified ? 1 : 0) << ',';
    for (std::size_t i = 0; i < e.weights.size(); ++i) os << (i ? ";" : "") << format_double(e.weights[i]);
    os << ',' << format_double(e.residual) << ',' << (e.isolated ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace ign
