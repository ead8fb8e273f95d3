#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ign/activation.hpp"
#include "ign/graph.hpp"

namespace ign {

/// Denominators below this are treated as zero.
inline constexpr double kMinDenominator = 1e-300;

/// Rounding threshold used to extract a node set from converged weights.
inline constexpr double kRoundingThreshold = 0.5;

struct StoppingCriteria {
  double epsilon = 1e-6;  ///< speed threshold on max_i |x_i^{k+1} - x_i^k|
  double alpha = 1e-2;    ///< binarity threshold on max_i min(x_i, 1 - x_i)
  std::size_t max_iters = 10000;

  /// Throws InvalidArgument unless epsilon > 0, 0 < alpha < 1/2, max_iters >= 1.
  void validate() const;
};

enum class StopReason { ConvergedBinary, SpeedOnly, MaxIters };

std::string to_string(StopReason r);

struct ConvergenceReport {
  Vector final_weights;
  std::size_t iterations = 0;
  StopReason stop_reason = StopReason::MaxIters;
  /// Present iff stop_reason == ConvergedBinary.
  std::optional<NodeSet> rounded_set;
  std::optional<SetClassification> rounded_class;
  /// ||x^k||_1 for k = 0..iterations, when a trace was requested.
  std::optional<std::vector<double>> l1_trace;
  /// x^k for k = 0..iterations, when a trace was requested.
  std::optional<std::vector<Vector>> trace;
  /// The iteration hit a non-normalizable iterate (weights underflowed);
  /// final_weights holds that iterate and stop_reason is MaxIters.
  bool non_normalizable = false;
};

/// x ⊘ (A+I)x. Throws NonNormalizable if a denominator is below kMinDenominator.
Vector normalize(const AdjacencyMatrix& a, std::span<const double> x);
/// Allocation free variant; `out` must have size n and must not alias x.
void normalize_into(const AdjacencyMatrix& a, std::span<const double> x, std::span<double> out);

/// h(normalize(A, x)) componentwise.
Vector step(const AdjacencyMatrix& a, std::span<const double> x, const Activation& h);
void step_into(const AdjacencyMatrix& a, std::span<const double> x, const Activation& h, std::span<double> out);

/// Iterates x <- step(A, x, h) until the speed, binarity and "some component
/// near 1" conditions all hold (ConvergedBinary) or max_iters is reached
/// (SpeedOnly when the last step was slow enough, MaxIters otherwise).
/// Non-convergence is reported, never thrown. Throws NonNormalizable only when
/// x0 itself is not normalizable.
ConvergenceReport run_ign(const AdjacencyMatrix& a, std::span<const double> x0, const Activation& h,
                          const StoppingCriteria& stop = {}, bool record_trace = false);

double l1_norm(std::span<const double> x);
double max_abs_diff(std::span<const double> x, std::span<const double> y);
/// max_i min(x_i, 1 - x_i).
double binarity(std::span<const double> x);

}  // namespace ign
