#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ign/activation.hpp"
#include "ign/baselines.hpp"
#include "ign/dynamics.hpp"
#include "ign/fixed_points.hpp"
#include "ign/graph.hpp"
#include "ign/io.hpp"
#include "ign/stats.hpp"

namespace ign {

enum class ExperimentKind { GapVsWG, Assignment, Conjectures, Census, Single };
enum class Pipeline { IgnOnly, IcnOnly, SaThenIcn };

std::string to_string(Pipeline p);
/// "ign", "icn" or "sa+icn"; throws InvalidArgument otherwise.
Pipeline parse_pipeline(std::string_view s);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::GapVsWG;
  std::vector<std::size_t> n_values{64};
  double p = 0.5;
  std::size_t samples = 1000;
  Activation activation = Activation::power(2.0, 0.01);
  /// Softassign temperature; required exactly when pipeline is SaThenIcn.
  std::optional<double> tau;
  Pipeline pipeline = Pipeline::IgnOnly;
  StoppingCriteria stop;
  std::uint64_t base_seed = 0;
  /// Where stats.csv, histogram.csv and failures/ go; empty writes nothing.
  std::filesystem::path output;

  WgDegrees wg_variant = WgDegrees::Recomputed;
  /// Sinkhorn tolerance used inside softassign.
  double sk_tol = 1e-2;
  /// Normalization steps examined per instance by the L1 check.
  std::size_t l1_steps = 100;
  /// Conjecture suite: node counts are drawn from [conj_n_min, conj_n_max].
  std::size_t conj_n_min = 3;
  std::size_t conj_n_max = 32;
  /// 0 picks the hardware concurrency.
  std::size_t workers = 0;

  /// Throws InvalidArgument on a broken invariant.
  void validate() const;
};

/// A run that did not end in a usable answer, kept for replay.
struct FailureRecord {
  std::size_t n = 0;
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string reason;
  std::optional<WeightedGraph> graph;
  std::optional<Eigen::MatrixXd> matrix;
};

struct GapCell {
  std::size_t n = 0;
  GapStats stats;
  std::size_t maximal = 0;
  std::size_t non_maximal = 0;
  double mean_iterations = 0.0;
  double sd_iterations = 0.0;
  std::vector<FailureRecord> failures;
};

/// IGN against WG on G(n, p) with uniform (0,1] weights, one cell per n.
std::vector<GapCell> run_gap_experiment(const ExperimentConfig& cfg);

struct AssignmentCell {
  std::size_t n = 0;
  Pipeline pipeline = Pipeline::IcnOnly;
  GapStats stats;
  /// Per-stage iteration counts over converged runs. Softassign counts are
  /// Sinkhorn rounds; they stay empty for the other pipelines.
  std::vector<double> sa_iterations;
  std::vector<double> icn_iterations;
  std::vector<double> total_iterations;
  /// Gaps above +1e-9; should never happen since the reference is exact.
  std::size_t positive_gaps = 0;
  std::vector<FailureRecord> failures;
};

/// Uniform [0,1) matrices against the Hungarian optimum, one cell per n.
std::vector<AssignmentCell> run_assignment_experiment(const ExperimentConfig& cfg);

struct ConjectureReport {
  std::size_t samples = 0;
  std::size_t ql1_violations = 0;
  std::size_t l1_violations = 0;
  std::size_t converged_binary = 0;
  std::size_t maximal = 0;
  std::size_t non_maximal = 0;
  std::size_t not_independent = 0;
  std::size_t speed_only = 0;
  std::size_t max_iters = 0;
  std::size_t non_normalizable = 0;
  /// Smallest ||y||_1 - y'(A+I)y seen, y the first normalized iterate.
  double min_ql1_slack = 0.0;
  std::vector<FailureRecord> violations;
};

/// A random connected instance of the conjecture suite: n uniform in
/// [n_min, n_max], p uniform in [0.1, 0.9], G(n, p) redrawn until connected,
/// weights uniform in (0,1].
WeightedGraph conjecture_instance(std::uint64_t seed, std::size_t n_min, std::size_t n_max);

/// QL1, strict L1 increase and run_ign outcome classes over random
/// connected instances.
ConjectureReport run_conjecture_suite(const ExperimentConfig& cfg);

/// run_ign on a loaded instance, with cfg's activation and stopping rule.
ConvergenceReport run_single(const WeightedGraph& g, const ExperimentConfig& cfg, bool record_trace = false);

/// Uniform [0,1) matrix drawn row by row from the instance seed.
Eigen::MatrixXd random_matrix(std::size_t n, std::uint64_t seed);

// Output writers. Each returns the CSV text and, when cfg.output is set,
// also writes it below that directory.
std::string write_gap_outputs(const ExperimentConfig& cfg, const std::vector<GapCell>& cells);
std::string write_assignment_outputs(const ExperimentConfig& cfg, const std::vector<AssignmentCell>& cells);
std::string write_conjecture_outputs(const ExperimentConfig& cfg, const ConjectureReport& r);
std::string write_census_outputs(const ExperimentConfig& cfg, const CensusResult& r);

}  // namespace ign
