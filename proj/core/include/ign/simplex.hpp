#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "ign/graph.hpp"

namespace ign {

enum class ObjectiveSense { Minimize, Maximize };

/// optimize c^T x  s.t.  A_eq x = b_eq,  A_ub x <= b_ub,  x >= lower.
/// A lower bound of -infinity makes the variable free. Empty constraint
/// blocks are allowed (zero rows, matching column count).
struct LinearProgram {
  Eigen::VectorXd objective;
  ObjectiveSense sense = ObjectiveSense::Minimize;
  Eigen::MatrixXd eq_matrix;
  Eigen::VectorXd eq_rhs;
  Eigen::MatrixXd ub_matrix;
  Eigen::VectorXd ub_rhs;
  Eigen::VectorXd lower;

  /// An LP over `vars` variables with no constraints and x >= 0.
  static LinearProgram with_variables(Eigen::Index vars);
  Eigen::Index variables() const { return objective.size(); }
  /// Throws InvalidArgument on inconsistent dimensions.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus s);

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Eigen::VectorXd> solution;
  std::optional<double> objective;
};

/// Dense two-phase tableau simplex with Bland's anti-cycling rule. Returns a
/// vertex solution. Intended for small problems (tens of variables).
LpResult simplex_solve(const LinearProgram& lp);

}  // namespace ign
