#include "ign/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "ign/dynamics.hpp"
#include "ign/error.hpp"
#include "ign/random.hpp"

namespace ign {

namespace {

void require_connected_positive(const AdjacencyMatrix& a, std::span<const double> x) {
  if (x.size() != a.size()) throw InvalidArgument("weight vector length differs from node count");
  if (!is_connected(a)) throw InvalidArgument("graph must be connected");
  for (double v : x)
    if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument("weights must be strictly positive");
}

void require_mis(const AdjacencyMatrix& a, const NodeSet& s) {
  if (classify_set(a, s) != SetClassification::MaximalIndependent)
    throw NotMaximalIndependent("node set is not a maximal independent set");
}

}  // namespace

JacobianMatrix jacobian(const AdjacencyMatrix& a, std::span<const double> x, const Activation& h) {
  const std::size_t n = a.size();
  if (x.size() != n) throw InvalidArgument("weight vector length differs from node count");
  JacobianMatrix j = JacobianMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    double neigh = 0.0;
    for (std::size_t k : a.neighbors(i)) neigh += x[k];
    const double closed = neigh + x[i];
    if (!(closed >= kMinDenominator))
      throw NonNormalizable("closed neighbourhood of node " + std::to_string(i) + " has zero weight");
    const double hii = h.derivative(x[i] / closed) / (closed * closed);
    const auto ii = static_cast<Eigen::Index>(i);
    j(ii, ii) = hii * neigh;
    for (std::size_t k : a.neighbors(i)) j(ii, static_cast<Eigen::Index>(k)) = -hii * x[i];
  }
  return j;
}

std::vector<double> eigenvalue_moduli(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue computation did not converge");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (const auto& ev : solver.eigenvalues()) out.push_back(std::abs(ev));
  std::sort(out.begin(), out.end());
  return out;
}

MisSpectrum mis_spectral_radius(const AdjacencyMatrix& a, const NodeSet& s, const Activation& h) {
  require_mis(a, s);
  const double h0 = h.derivative(0.0);
  const auto in_s = s.mask(a.size());
  MisSpectrum out;
  out.spectrum.assign(s.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (in_s[i]) continue;
    std::size_t c = 0;
    for (std::size_t j : a.neighbors(i)) c += in_s[j] ? 1 : 0;
    out.spectrum.push_back(h0 / static_cast<double>(c));
  }
  std::sort(out.spectrum.begin(), out.spectrum.end());
  const std::size_t dens = density(a, s);
  out.radius = dens == kDensityAllNodes ? 0.0 : h0 / static_cast<double>(dens);
  return out;
}

bool in_fast_basin(const AdjacencyMatrix& a, const NodeSet& s, std::span<const double> x) {
  if (x.size() != a.size()) throw InvalidArgument("weight vector length differs from node count");
  require_mis(a, s);
  if (density(a, s) < 2) throw InsufficientDensity("fast basin needs a maximal independent set of density >= 2");
  std::size_t d_s = 0;
  for (std::size_t i : s) d_s = std::max(d_s, a.degree(i));
  const auto in_s = s.mask(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (in_s[i]) {
      if (!(x[i] > 0.5)) return false;
    } else if (!(x[i] < 1.0 / (2.0 * static_cast<double>(d_s)))) {
      return false;
    }
  }
  return true;
}

Ql1Result check_ql1(const AdjacencyMatrix& a, std::span<const double> x) {
  require_connected_positive(a, x);
  const Vector y = normalize(a, x);
  Ql1Result r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double by = y[i];
    for (std::size_t j : a.neighbors(i)) by += y[j];
    r.lhs += y[i] * by;
    r.rhs += y[i];
  }
  r.holds = r.lhs <= r.rhs + 1e-12;
  return r;
}

double taco_residual(double u, double v, double w) { return u * v * w + u * w - u - v - w + 1.0; }

namespace {

// Near a slowly drifting iterate the L1 gain per step is second order in the
// step size and can sit far below one double ulp of the norm, so the check
// iterates in quad precision where the compiler has it.
#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

void normalize_wide(const AdjacencyMatrix& a, const std::vector<Wide>& x, std::vector<Wide>& out) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    Wide d = x[i];
    for (std::size_t j : a.neighbors(i)) d += x[j];
    out[i] = x[i] / d;
  }
}

}  // namespace

bool l1_monotonicity_check(const AdjacencyMatrix& a, std::span<const double> x0, std::size_t iters) {
  require_connected_positive(a, x0);
  const std::size_t n = x0.size();
  std::vector<Wide> x(x0.begin(), x0.end()), next(n);
  normalize_wide(a, x, next);  // x^1
  x.swap(next);
  auto l1_of = [](const std::vector<Wide>& v) {
    Wide s = 0;
    for (Wide e : v) s += e;
    return s;
  };
  Wide l1 = l1_of(x);
  for (std::size_t k = 1; k < iters; ++k) {
    normalize_wide(a, x, next);
    Wide moved = 0;
    for (std::size_t i = 0; i < n; ++i) moved = std::max(moved, next[i] > x[i] ? next[i] - x[i] : x[i] - next[i]);
    const Wide l1_next = l1_of(next);
    if (l1_next < l1 - Wide(1e-12)) return false;
    if (moved > Wide(1e-13) && !(l1_next > l1)) return false;
    x.swap(next);
    l1 = l1_next;
  }
  return true;
}

bool tree_injectivity_probe(const AdjacencyMatrix& tree, std::size_t trials, std::uint64_t seed) {
  if (!is_tree(tree)) throw InvalidArgument("tree_injectivity_probe needs a tree");
  const std::size_t n = tree.size();
  Rng rng(seed);
  Vector x(n), z(n);
  auto draw_unit = [&](Vector& v) {
    double s = 0.0;
    for (auto& e : v) s += (e = uniform_open_closed(rng));
    for (auto& e : v) e /= s;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    draw_unit(x);
    draw_unit(z);
    if (max_abs_diff(x, z) <= 1e-9) continue;  // same projective point
    if (max_abs_diff(normalize(tree, x), normalize(tree, z)) <= 1e-9) return false;
  }
  return true;
}

}  // namespace ign
