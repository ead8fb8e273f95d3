#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ign/graph.hpp"

namespace ign {

/// Cutoff for "x > 0" in fixed-cluster certificates.
inline constexpr double kStrictPositivity = 1e-9;
inline constexpr double kClusterResidualTol = 1e-9;

struct FixedClusterCertificate {
  AdjacencyMatrix graph;
  Vector weights;
  /// max_i |((A+I)x)_i - 1|
  double residual = 0.0;
  double min_weight = 0.0;
};

/// max_i |((A+I)x)_i - 1|
double cluster_residual(const AdjacencyMatrix& a, std::span<const double> x);

/// Looks for x > 0 with (A+I)x = 1. First the feasibility LP
/// min 1'y s.t. (A+I)x + y = 1, x, y >= 0; then, if that reaches zero,
/// max t s.t. (A+I)x = 1, x >= t to pick a point with the largest minimum
/// weight. Throws InvalidArgument if A is disconnected.
std::optional<FixedClusterCertificate> find_fixed_cluster(const AdjacencyMatrix& a);

/// x > 1e-9, residual <= 1e-9, and one identity step leaves x in place (to 1e-9).
bool verify_fixed_cluster(const AdjacencyMatrix& a, std::span<const double> x);

/// x = 1/(d+1) on a d-regular graph. Throws InvalidArgument if A is not regular.
FixedClusterCertificate regular_fixed_cluster(const AdjacencyMatrix& a);

/// A+I is nonsingular and its unique solution of (A+I)x = 1 is strictly
/// positive, so the cluster is an isolated point rather than part of a family.
bool is_isolated_fixed_cluster(const AdjacencyMatrix& a);

/// Largest drift max_i |x_i^k - x_i| over k identity steps from x.
double fixed_point_drift(const AdjacencyMatrix& a, std::span<const double> x, std::size_t steps);

struct CensusEntry {
  std::size_t size = 0;
  /// Canonical upper-triangle bit string.
  std::string code;
  AdjacencyMatrix graph;
  bool certified = false;
  bool isolated = false;
  Vector weights;
  double residual = 0.0;
};

struct CensusCount {
  std::size_t size = 0;
  std::size_t connected = 0;
  /// connected, not regular, minimum degree >= 2
  std::size_t candidates = 0;
  std::size_t certified = 0;
  std::size_t isolated = 0;
};

struct CensusResult {
  std::vector<CensusCount> counts;
  /// One entry per candidate, certified or not.
  std::vector<CensusEntry> entries;
};

/// Non-trivial fixed clusters among the connected graphs of each size in
/// [n_min, n_max]. Throws SizeLimitExceeded above 7 nodes.
CensusResult census(std::size_t n_min, std::size_t n_max, std::size_t workers = 0);

/// CSV with header size,code,certified,weights,residual,isolated; weights are
/// semicolon separated.
std::string census_csv(const CensusResult& r);

}  // namespace ign
