#include "ign/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ign/error.hpp"

namespace ign {

void Histogram::add(double v) {
  if (v < lo) {
    ++counts.front();
  } else if (v > hi) {
    ++counts.back();
  } else {
    auto k = static_cast<std::size_t>(std::floor((v - lo) / bin_width()));
    counts[1 + std::min(k, kBins - 1)] += 1;
  }
}

std::size_t Histogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

double lower_median(std::vector<double> v) {
  if (v.empty()) throw InvalidArgument("median of an empty sample");
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>((v.size() - 1) / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

double mean(std::span<const double> v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

GapStats summarize_gaps(std::vector<double> gaps, std::size_t n_failed) {
  GapStats s;
  s.n_failed = n_failed;
  s.samples = gaps.size() + n_failed;
  if (gaps.empty()) return s;
  // Sorting first makes the floating-point sum independent of completion order.
  std::sort(gaps.begin(), gaps.end());
  s.average = mean(gaps);
  s.median = gaps[(gaps.size() - 1) / 2];
  const auto nonneg = std::count_if(gaps.begin(), gaps.end(), [](double g) { return g >= 0.0; });
  s.proportion_nonneg = static_cast<double>(nonneg) / static_cast<double>(gaps.size());
  for (double g : gaps) s.histogram.add(g);
  return s;
}

}  // namespace ign
