#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ign {

/// 81 equal bins on [lo, hi] plus one underflow and one overflow bin.
struct Histogram {
  static constexpr std::size_t kBins = 81;
  double lo = -0.2;
  double hi = 0.2;
  /// counts[0] is (-inf, lo), counts[kBins + 1] is (hi, +inf).
  std::vector<std::size_t> counts = std::vector<std::size_t>(kBins + 2, 0);

  double bin_width() const { return (hi - lo) / static_cast<double>(kBins); }
  /// Left edge of inner bin k (0-based, k <= kBins gives the right edge of the last).
  double edge(std::size_t k) const { return lo + bin_width() * static_cast<double>(k); }
  void add(double v);
  std::size_t total() const;
};

struct GapStats {
  double average = 0.0;
  /// Lower-middle element for even counts.
  double median = 0.0;
  /// Fraction of gaps >= 0.
  double proportion_nonneg = 0.0;
  Histogram histogram;
  std::size_t samples = 0;
  std::size_t n_failed = 0;
};

/// Aggregates converged gaps; order of `gaps` does not matter. Empty input
/// leaves average, median and proportion at 0.
GapStats summarize_gaps(std::vector<double> gaps, std::size_t n_failed);

/// Lower-middle median; throws InvalidArgument on empty input.
double lower_median(std::vector<double> v);
double mean(std::span<const double> v);
/// Sample standard deviation (n - 1); 0 for fewer than two values.
double stddev(std::span<const double> v);

}  // namespace ign
