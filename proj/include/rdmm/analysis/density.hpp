// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rdmm {

/// Density-normalized histogram: sum density[i] * (edges[i+1] - edges[i]) = 1.
struct EigenDensity {
  std::vector<double> edges;
  std::vector<double> density;
  std::size_t sample_count = 0;

  double integral() const;
};

/// Equal-width bins over [min, max]; the last bin is closed. Constant input
/// gets the interval [x - 1/2, x + 1/2].
EigenDensity histogram(std::span<const double> samples, std::size_t bins);
/// Explicit ascending edges; samples outside [edges.front(), edges.back()] are ignored.
EigenDensity histogram(std::span<const double> samples, std::span<const double> edges);

struct GaussianFit {
  double mu = 0.0;
  double sigma = 0.0;
};

/// Sample mean and unbiased standard deviation.
GaussianFit gaussian_fit(std::span<const double> samples);

double normal_cdf(double x);

using Cdf = std::function<double(double)>;

/// sup |F_n - F|
double ks_distance(std::span<const double> samples, const Cdf& cdf);
/// sup |F_n - G_m|
double ks_distance_two_sample(std::span<const double> x, std::span<const double> y);

}  // namespace rdmm
