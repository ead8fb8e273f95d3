#pragma once
// Reference implementations used only by tests. They are deliberately naive
// and share no code paths with the library algorithms they check.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ign/activation.hpp"
#include "ign/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix dense(const ign::AdjacencyMatrix& a) {
  Matrix m(a.size(), std::vector<int>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a(i, j) ? 1 : 0;
  return m;
}

inline bool connected(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  std::vector<int> seen(n, 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w)
      if (m[v][w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(static_cast<int>(w));
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s; });
}

/// Graph on n nodes from a bit mask over the pairs (i<j) in row-major order.
inline Matrix from_pair_mask(std::size_t n, std::uint64_t mask) {
  Matrix m(n, std::vector<int>(n, 0));
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1U) m[i][j] = m[j][i] = 1;
  return m;
}

/// Number of permutations p with m[p(i)][p(j)] = m[i][j].
inline std::size_t automorphisms(const Matrix& m) {
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < m.size() && ok; ++i)
      for (std::size_t j = 0; j < m.size() && ok; ++j) ok = m[p[i]][p[j]] == m[i][j];
    count += ok ? 1 : 0;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline bool isomorphic(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[p[i]][p[j]] == b[i][j];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Isomorphism classes of connected graphs by exhaustive labelled
/// enumeration and pairwise isomorphism tests. Practical up to n = 5.
inline std::vector<Matrix> connected_classes(std::size_t n) {
  std::vector<Matrix> reps;
  const std::size_t pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Matrix m = from_pair_mask(n, mask);
    if (!connected(m)) continue;
    bool fresh = true;
    for (const auto& r : reps)
      if (isomorphic(r, m)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(m);
  }
  return reps;
}

/// Labelled connected graphs on n nodes, by the inclusion-exclusion
/// recurrence over the component containing node 1.
inline std::uint64_t labelled_connected(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  auto binom = [](std::size_t a, std::size_t b) {
    std::uint64_t r = 1;
    for (std::size_t k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
  };
  auto all = [](std::size_t k) { return std::uint64_t{1} << (k * (k - 1) / 2); };
  for (std::size_t m = 1; m <= n; ++m) {
    std::uint64_t disconnected = 0;
    for (std::size_t k = 1; k < m; ++k) disconnected += binom(m - 1, k - 1) * c[k] * all(m - k);
    c[m] = all(m) - disconnected;
  }
  return c[n];
}

/// Plain 2^n maximum weight independent set; returns the best total.
inline double mwis_total(const ign::AdjacencyMatrix& a, const std::vector<double>& w) {
  const std::size_t n = a.size();
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    double total = 0.0;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      total += w[i];
      for (std::size_t j = i + 1; j < n; ++j)
        if ((mask >> j & 1U) && a(i, j)) ok = false;
    }
    if (ok) best = std::max(best, total);
  }
  return best;
}

/// Best assignment total over all n! permutations.
inline double assignment_total(const Eigen::MatrixXd& x) {
  std::vector<int> p(static_cast<std::size_t>(x.rows()));
  std::iota(p.begin(), p.end(), 0);
  double best = -1e300;
  do {
    double t = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) t += x(static_cast<Eigen::Index>(i), p[i]);
    best = std::max(best, t);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Direct transcription of x_i / (x_i + sum_j A_ij x_j), with h applied after.
inline std::vector<double> step(const Matrix& a, const std::vector<double>& x, const ign::Activation& h) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = x[i];
    for (std::size_t j = 0; j < x.size(); ++j) d += a[i][j] * x[j];
    y[i] = h.value(x[i] / d);
  }
  return y;
}

/// Central finite-difference Jacobian of step.
inline Eigen::MatrixXd fd_jacobian(const Matrix& a, const std::vector<double>& x, const ign::Activation& h,
                                   double eps = 1e-6) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd j(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    auto hi = x, lo = x;
    hi[static_cast<std::size_t>(k)] += eps;
    lo[static_cast<std::size_t>(k)] -= eps;
    const auto fh = step(a, hi, h), fl = step(a, lo, h);
    for (Eigen::Index i = 0; i < n; ++i)
      j(i, k) = (fh[static_cast<std::size_t>(i)] - fl[static_cast<std::size_t>(i)]) / (2 * eps);
  }
  return j;
}

/// Central difference of h.value.
inline double fd_derivative(const ign::Activation& h, double y, double eps = 1e-6) {
  const double lo = std::max(0.0, y - eps), hi = std::min(1.0, y + eps);
  return (h.value(hi) - h.value(lo)) / (hi - lo);
}

}  // namespace oracle
