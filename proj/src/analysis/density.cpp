// SPDX-License-Identifier: Apache-2.0
#include "rdmm/analysis/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rdmm/core/error.hpp"

namespace rdmm {

double EigenDensity::integral() const {
  double s = 0.0;
  for (std::size_t i = 0; i < density.size(); ++i) s += density[i] * (edges[i + 1] - edges[i]);
  return s;
}

EigenDensity histogram(std::span<const double> samples, std::size_t bins) {
  if (samples.empty()) throw DomainError("histogram: no samples");
  require(bins >= 1, "histogram: bins must be >= 1");
  auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  double a = *lo, b = *hi;
  if (a == b) {
    a -= 0.5;
    b += 0.5;
  }
  std::vector<double> edges(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) edges[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(bins);
  edges.back() = b;
  return histogram(samples, edges);
}

EigenDensity histogram(std::span<const double> samples, std::span<const double> edges) {
  if (samples.empty()) throw DomainError("histogram: no samples");
  require(edges.size() >= 2, "histogram: need at least one bin");
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (!(edges[i] > edges[i - 1])) throw DomainError("histogram: edges must be strictly ascending");
  EigenDensity h;
  h.edges.assign(edges.begin(), edges.end());
  const std::size_t bins = edges.size() - 1;
  std::vector<std::size_t> counts(bins, 0);
  for (double x : samples) {
    if (!(x >= edges.front() && x <= edges.back())) continue;
    auto it = std::upper_bound(edges.begin(), edges.end(), x);
    std::size_t k = static_cast<std::size_t>(it - edges.begin());
    k = k == 0 ? 0 : std::min(k - 1, bins - 1);
    ++counts[k];
    ++h.sample_count;
  }
  if (h.sample_count == 0) throw DomainError("histogram: no samples inside the edges");
  h.density.resize(bins);
  for (std::size_t i = 0; i < bins; ++i)
    h.density[i] = static_cast<double>(counts[i]) / (static_cast<double>(h.sample_count) * (edges[i + 1] - edges[i]));
  return h;
}

GaussianFit gaussian_fit(std::span<const double> samples) {
  if (samples.size() < 2) throw DomainError("gaussian_fit: need at least 2 samples");
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= static_cast<double>(samples.size());
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(samples.size() - 1))};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double ks_distance(std::span<const double> samples, const Cdf& cdf) {
  if (samples.size() < 10) throw DomainError("ks_distance: need at least 10 samples");
  std::vector<double> x(samples.begin(), samples.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = std::clamp(cdf(x[i]), 0.0, 1.0);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return std::clamp(d, 0.0, 1.0);
}

double ks_distance_two_sample(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) throw DomainError("ks_distance: empty sample");
  std::vector<double> a(x.begin(), x.end()), b(y.begin(), y.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

}  // namespace rdmm
