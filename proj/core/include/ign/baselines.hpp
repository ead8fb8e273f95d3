#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "ign/graph.hpp"

namespace ign {

struct MwisSolution {
  NodeSet set;
  double total_weight = 0.0;
};

/// Sum of w over S, accumulated in increasing index order.
double set_weight(std::span<const double> w, const NodeSet& s);

/// How the greedy recomputes the relative weighted degree d(i) = Σ_{j~i} w_j / w_i.
enum class WgDegrees {
  /// On the surviving induced subgraph at every round (Kako et al.'s WG).
  Recomputed,
  /// Once on the input graph; nodes are then taken in increasing d order.
  Initial,
};

/// Greedy MWIS: repeatedly take the surviving node of minimum relative
/// weighted degree (ties to the lowest index) and delete it with its
/// neighbours. Always returns a maximal independent set. Throws
/// InvalidArgument when some weight is zero.
MwisSolution wg_greedy(const WeightedGraph& g, WgDegrees mode = WgDegrees::Recomputed);

/// Largest node count accepted by brute_force_mwis.
inline constexpr std::size_t kMaxBruteForceNodes = 24;

/// Exact MWIS by depth-first enumeration of independent sets with bound
/// pruning. Ties go to the lexicographically smallest set.
MwisSolution brute_force_mwis(const WeightedGraph& g);

struct Assignment {
  /// permutation[i] = column assigned to row i.
  std::vector<std::size_t> permutation;
  double total = 0.0;
};

/// Maximum-weight perfect assignment of a square matrix, O(n^3)
/// (shortest augmenting paths with potentials, on negated costs).
Assignment hungarian(const Eigen::MatrixXd& x);

/// Signed relative gap (w_test - w_ref) / w_ref. Throws unless w_ref > 0.
double gap(double w_test, double w_ref);

}  // namespace ign
