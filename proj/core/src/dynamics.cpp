#include "ign/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "ign/error.hpp"

namespace ign {

void StoppingCriteria::validate() const {
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be > 0");
  if (!(alpha > 0.0 && alpha < 0.5)) throw InvalidArgument("alpha must lie in (0, 1/2)");
  if (max_iters < 1) throw InvalidArgument("max_iters must be >= 1");
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::ConvergedBinary: return "ConvergedBinary";
    case StopReason::SpeedOnly: return "SpeedOnly";
    case StopReason::MaxIters: return "MaxIters";
  }
  return "?";
}

void normalize_into(const AdjacencyMatrix& a, std::span<const double> x, std::span<double> out) {
  const std::size_t n = a.size();
  if (x.size() != n || out.size() != n) throw InvalidArgument("weight vector length differs from node count");
  for (std::size_t i = 0; i < n; ++i) {
    double d = x[i];
    for (std::size_t j : a.neighbors(i)) d += x[j];
    if (!(d >= kMinDenominator))
      throw NonNormalizable("closed neighbourhood of node " + std::to_string(i) + " has zero weight");
    out[i] = x[i] / d;
  }
}

Vector normalize(const AdjacencyMatrix& a, std::span<const double> x) {
  Vector out(x.size());
  normalize_into(a, x, out);
  return out;
}

void step_into(const AdjacencyMatrix& a, std::span<const double> x, const Activation& h, std::span<double> out) {
  normalize_into(a, x, out);
  if (h.is_identity()) return;
  for (double& v : out) v = h.value(v);
}

Vector step(const AdjacencyMatrix& a, std::span<const double> x, const Activation& h) {
  Vector out(x.size());
  step_into(a, x, h, out);
  return out;
}

double l1_norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += std::abs(v);
  return s;
}

double max_abs_diff(std::span<const double> x, std::span<const double> y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

double binarity(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::min(v, 1.0 - v));
  return m;
}

ConvergenceReport run_ign(const AdjacencyMatrix& a, std::span<const double> x0, const Activation& h,
                          const StoppingCriteria& stop, bool record_trace) {
  stop.validate();
  if (a.size() == 0) throw InvalidArgument("run_ign needs at least one node");
  if (x0.size() != a.size()) throw InvalidArgument("weight vector length differs from node count");
  validate_weights(x0);
  if (!is_normalizable(a, x0)) throw NonNormalizable("initial weights are not normalizable");

  ConvergenceReport report;
  Vector x(x0.begin(), x0.end());
  Vector next(x.size());
  if (record_trace) {
    report.trace.emplace().push_back(x);
    report.l1_trace.emplace().push_back(l1_norm(x));
  }

  double speed = 0.0;
  bool converged = false;
  for (std::size_t k = 0; k < stop.max_iters; ++k) {
    try {
      step_into(a, x, h, next);
    } catch (const NonNormalizable&) {
      report.non_normalizable = true;
      break;
    }
    speed = max_abs_diff(x, next);
    x.swap(next);
    ++report.iterations;
    if (record_trace) {
      report.trace->push_back(x);
      report.l1_trace->push_back(l1_norm(x));
    }
    if (speed <= stop.epsilon && binarity(x) <= stop.alpha &&
        *std::max_element(x.begin(), x.end()) >= 1.0 - stop.alpha) {
      converged = true;
      break;
    }
  }

  if (converged) {
    report.stop_reason = StopReason::ConvergedBinary;
    report.rounded_set = NodeSet::from_threshold(x, kRoundingThreshold);
    report.rounded_class = classify_set(a, *report.rounded_set);
  } else if (!report.non_normalizable && speed <= stop.epsilon) {
    report.stop_reason = StopReason::SpeedOnly;
  } else {
    report.stop_reason = StopReason::MaxIters;
  }
  report.final_weights = std::move(x);
  return report;
}

}  // namespace ign
