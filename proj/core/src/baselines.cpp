#include "ign/baselines.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ign/error.hpp"

namespace ign {

double set_weight(std::span<const double> w, const NodeSet& s) {
  double total = 0.0;
  for (std::size_t i : s) total += w[i];
  return total;
}

MwisSolution wg_greedy(const WeightedGraph& g, WgDegrees mode) {
  const std::size_t n = g.size();
  const auto& a = g.adjacency;
  const auto& w = g.weights;
  for (double v : w)
    if (!(v > 0.0)) throw InvalidArgument("WG needs strictly positive weights");

  std::vector<bool> alive(n, true);
  std::vector<std::size_t> chosen;
  auto take = [&](std::size_t i) {
    chosen.push_back(i);
    alive[i] = false;
    for (std::size_t j : a.neighbors(i)) alive[j] = false;
  };

  if (mode == WgDegrees::Initial) {
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j : a.neighbors(i)) s += w[j];
      d[i] = s / w[i];
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return d[l] < d[r]; });
    for (std::size_t i : order)
      if (alive[i]) take(i);
  } else {
    std::size_t remaining = n;
    while (remaining > 0) {
      std::size_t best = n;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        double s = 0.0;
        for (std::size_t j : a.neighbors(i))
          if (alive[j]) s += w[j];
        const double d = s / w[i];
        if (best == n || d < best_d) {
          best = i;
          best_d = d;
        }
      }
      take(best);
      remaining = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
    }
  }
  MwisSolution out{NodeSet(std::move(chosen)), 0.0};
  out.total_weight = set_weight(w, out.set);
  return out;
}

MwisSolution brute_force_mwis(const WeightedGraph& g) {
  const std::size_t n = g.size();
  if (n > kMaxBruteForceNodes)
    throw SizeLimitExceeded("brute_force_mwis is limited to " + std::to_string(kMaxBruteForceNodes) + " nodes");
  const auto& a = g.adjacency;
  const auto& w = g.weights;

  // suffix[i] = total weight of nodes i..n-1, an upper bound on what can still be added.
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + w[i];

  std::vector<std::size_t> current, best;
  double best_weight = -1.0;
  std::vector<int> blocked(n, 0);

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      const double cw = set_weight(w, NodeSet(current));
      if (cw > best_weight || (cw == best_weight && current < best)) {
        best_weight = cw;
        best = current;
      }
      return;
    }
    double cw = 0.0;
    for (std::size_t k : current) cw += w[k];
    if (cw + suffix[i] < best_weight) return;
    if (blocked[i] == 0) {
      current.push_back(i);
      for (std::size_t j : a.neighbors(i)) ++blocked[j];
      self(self, i + 1);
      for (std::size_t j : a.neighbors(i)) --blocked[j];
      current.pop_back();
    }
    self(self, i + 1);
  };
  dfs(dfs, 0);
  return {NodeSet(best), best_weight < 0.0 ? 0.0 : best_weight};
}

Assignment hungarian(const Eigen::MatrixXd& x) {
  if (x.rows() != x.cols()) throw InvalidArgument("hungarian needs a square matrix");
  const auto n = static_cast<std::size_t>(x.rows());
  if (n == 0) throw InvalidArgument("hungarian needs n >= 1");
  if (!x.allFinite()) throw InvalidArgument("hungarian needs finite weights");
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Min-cost assignment on cost = -x; 1-based arrays, column 0 is a sentinel.
  auto cost = [&](std::size_t i, std::size_t j) {
    return -x(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1));
  };
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.permutation.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.permutation[match[j] - 1] = j - 1;
  for (std::size_t i = 0; i < n; ++i)
    out.total += x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(out.permutation[i]));
  return out;
}

double gap(double w_test, double w_ref) {
  if (!(w_ref > 0.0)) throw InvalidArgument("gap needs a positive reference weight");
  return (w_test - w_ref) / w_ref;
}

}  // namespace ign
