#include "ign/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ign/error.hpp"

namespace ign {

namespace {

using Index = Eigen::Index;

constexpr double kPivotEps = 1e-12;
constexpr double kCostEps = 1e-12;
constexpr double kFeasibilityTol = 1e-9;
constexpr int kMaxPivots = 100000;

/// Tableau in canonical form: rows 0..m-1 are constraints, row m the reduced
/// costs, the last column the right-hand side.
class Tableau {
 public:
  Tableau(Index rows, Index cols) : t_(Eigen::MatrixXd::Zero(rows + 1, cols + 1)), basis_(rows, -1) {}

  double& at(Index i, Index j) { return t_(i, j); }
  double rhs(Index i) const { return t_(i, t_.cols() - 1); }
  double& rhs(Index i) { return t_(i, t_.cols() - 1); }
  Index rows() const { return t_.rows() - 1; }
  Index cols() const { return t_.cols() - 1; }
  Index& basis(Index i) { return basis_[static_cast<std::size_t>(i)]; }
  double cost(Index j) const { return t_(rows(), j); }
  double objective() const { return -t_(rows(), cols()); }

  void set_costs(const Eigen::VectorXd& c) {
    const Index m = rows();
    t_.row(m).setZero();
    t_.row(m).head(c.size()) = c.transpose();
    for (Index i = 0; i < m; ++i) {
      const double cb = t_(m, basis_[static_cast<std::size_t>(i)]);
      if (cb != 0.0) t_.row(m) -= cb * t_.row(i);
    }
  }

  void pivot(Index r, Index c) {
    t_.row(r) /= t_(r, c);
    for (Index i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      const double f = t_(i, c);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    t_(r, c) = 1.0;
    basis_[static_cast<std::size_t>(r)] = c;
  }

  /// Runs Bland-rule pivots over columns [0, allowed). Returns false if unbounded.
  bool optimize(Index allowed) {
    for (int guard = 0; guard < kMaxPivots; ++guard) {
      Index enter = -1;
      for (Index j = 0; j < allowed; ++j) {
        if (cost(j) < -kCostEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Index i = 0; i < rows(); ++i) {
        const double a = t_(i, enter);
        if (a <= kPivotEps) continue;
        const double ratio = rhs(i) / a;
        if (ratio < best - kPivotEps ||
            (std::abs(ratio - best) <= kPivotEps && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    throw Error("simplex pivot limit reached");
  }

 private:
  Eigen::MatrixXd t_;
  std::vector<Index> basis_;
};

}  // namespace

LinearProgram LinearProgram::with_variables(Index vars) {
  LinearProgram lp;
  lp.objective = Eigen::VectorXd::Zero(vars);
  lp.eq_matrix.resize(0, vars);
  lp.eq_rhs.resize(0);
  lp.ub_matrix.resize(0, vars);
  lp.ub_rhs.resize(0);
  lp.lower = Eigen::VectorXd::Zero(vars);
  return lp;
}

void LinearProgram::validate() const {
  const Index n = variables();
  if (eq_matrix.cols() != n || ub_matrix.cols() != n) throw InvalidArgument("LP constraint width differs from variable count");
  if (eq_matrix.rows() != eq_rhs.size() || ub_matrix.rows() != ub_rhs.size())
    throw InvalidArgument("LP right-hand side length differs from constraint count");
  if (lower.size() != n) throw InvalidArgument("LP lower bound length differs from variable count");
  if (!objective.allFinite() || !eq_matrix.allFinite() || !ub_matrix.allFinite() || !eq_rhs.allFinite() ||
      !ub_rhs.allFinite())
    throw InvalidArgument("LP data must be finite");
  for (Index k = 0; k < n; ++k)
    if (std::isnan(lower(k)) || lower(k) == std::numeric_limits<double>::infinity())
      throw InvalidArgument("LP lower bounds must be finite or -infinity");
}

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "?";
}

LpResult simplex_solve(const LinearProgram& lp) {
  lp.validate();
  const Index n = lp.variables();
  const Index meq = lp.eq_matrix.rows();
  const Index mub = lp.ub_matrix.rows();
  const Index m = meq + mub;

  // Structural columns: x = lower + x' for bounded variables, x = x+ - x- for free ones.
  std::vector<Index> pos_col(static_cast<std::size_t>(n)), neg_col(static_cast<std::size_t>(n), -1);
  Index s = 0;
  for (Index k = 0; k < n; ++k) {
    pos_col[static_cast<std::size_t>(k)] = s++;
    if (std::isinf(lp.lower(k))) neg_col[static_cast<std::size_t>(k)] = s++;
  }
  const Eigen::VectorXd shift = lp.lower.unaryExpr([](double l) { return std::isinf(l) ? 0.0 : l; });
  const Index slack0 = s;
  const Index art0 = slack0 + mub;
  const Index cols = art0 + m;

  Tableau tab(m, cols);
  for (Index r = 0; r < m; ++r) {
    const bool is_eq = r < meq;
    const auto row = is_eq ? lp.eq_matrix.row(r) : lp.ub_matrix.row(r - meq);
    double b = (is_eq ? lp.eq_rhs(r) : lp.ub_rhs(r - meq)) - row.dot(shift);
    const double sign = b < 0.0 ? -1.0 : 1.0;
    for (Index k = 0; k < n; ++k) {
      tab.at(r, pos_col[static_cast<std::size_t>(k)]) = sign * row(k);
      if (neg_col[static_cast<std::size_t>(k)] >= 0) tab.at(r, neg_col[static_cast<std::size_t>(k)]) = -sign * row(k);
    }
    if (!is_eq) tab.at(r, slack0 + (r - meq)) = sign;
    tab.at(r, art0 + r) = 1.0;
    tab.rhs(r) = sign * b;
    tab.basis(r) = (!is_eq && sign > 0.0) ? slack0 + (r - meq) : art0 + r;
  }

  // Phase 1: minimize the sum of artificials that start in the basis.
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(cols);
  for (Index r = 0; r < m; ++r)
    if (tab.basis(r) >= art0) phase1(art0 + r) = 1.0;
  tab.set_costs(phase1);
  tab.optimize(cols);
  if (tab.objective() > kFeasibilityTol) return {LpStatus::Infeasible, std::nullopt, std::nullopt};

  // Drive zero-level artificials out of the basis where possible; rows where
  // that fails are redundant and stay inert.
  for (Index r = 0; r < m; ++r) {
    if (tab.basis(r) < art0) continue;
    for (Index j = 0; j < art0; ++j) {
      if (std::abs(tab.at(r, j)) > 1e-9) {
        tab.pivot(r, j);
        break;
      }
    }
  }

  // Phase 2 (always minimizing).
  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(cols);
  const double dir = lp.sense == ObjectiveSense::Maximize ? -1.0 : 1.0;
  for (Index k = 0; k < n; ++k) {
    phase2(pos_col[static_cast<std::size_t>(k)]) = dir * lp.objective(k);
    if (neg_col[static_cast<std::size_t>(k)] >= 0) phase2(neg_col[static_cast<std::size_t>(k)]) = -dir * lp.objective(k);
  }
  tab.set_costs(phase2);
  if (!tab.optimize(art0)) return {LpStatus::Unbounded, std::nullopt, std::nullopt};

  Eigen::VectorXd value = Eigen::VectorXd::Zero(cols);
  for (Index r = 0; r < m; ++r) value(tab.basis(r)) = tab.rhs(r);
  Eigen::VectorXd x(n);
  for (Index k = 0; k < n; ++k) {
    x(k) = shift(k) + value(pos_col[static_cast<std::size_t>(k)]);
    if (neg_col[static_cast<std::size_t>(k)] >= 0) x(k) -= value(neg_col[static_cast<std::size_t>(k)]);
  }
  return {LpStatus::Optimal, x, lp.objective.dot(x)};
}

}  // namespace ign
