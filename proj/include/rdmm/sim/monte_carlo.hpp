// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rdmm/sim/dims.hpp"
#include "rdmm/sim/state.hpp"
#include "rdmm/sim/trajectory.hpp"

namespace rdmm {

struct McOptions {
  Backend backend = Backend::Auto;
  unsigned workers = 1;
  /// Pooled eigenvalue histogram on [0, hist_max) per time; 0 bins disables it.
  std::size_t hist_bins = 0;
  double hist_max = 1.0;
  /// Leave lambda_1 out of the pooled histogram.
  bool bulk_only = false;
  /// Keep every realization's spectrum in RunRecord::spectra.
  bool keep_spectra = false;
};

struct RunRecord {
  BipartiteDims dims{2, 2};
  std::vector<double> times;
  std::size_t realizations = 0;
  std::uint64_t seed = 0;
  Backend backend = Backend::Auto;

  std::vector<double> purity_mean;
  std::vector<double> purity_se;
  /// [time][k], k = 0 is the largest eigenvalue.
  std::vector<std::vector<double>> eig_mean;
  /// [time][realization]
  std::vector<std::vector<double>> lambda1;
  /// [time][bin]; values >= hist_max land in hist_overflow.
  std::vector<std::vector<std::uint64_t>> hist_counts;
  std::vector<std::uint64_t> hist_overflow;
  double hist_max = 1.0;
  /// [time][realization][k], descending, only with keep_spectra.
  std::vector<std::vector<std::vector<double>>> spectra;
  /// Largest |sum_k lambda_k - 1| seen.
  double max_trace_error = 0.0;
};

/// Realization r draws from RngStream(seed, r), so the record does not
/// depend on the worker count.
RunRecord monte_carlo(const BipartiteDims& dims, const InitialStateSpec& spec, std::span<const double> times,
                      std::size_t realizations, std::uint64_t seed, const McOptions& opt = {});

/// Same, for an arbitrary initial coefficient matrix.
RunRecord monte_carlo(const CoefficientMatrix& a0, std::span<const double> times, std::size_t realizations,
                      std::uint64_t seed, const McOptions& opt = {});

struct SpectralPurityAverage {
  std::vector<double> mean;  ///< per time
  std::vector<double> se;
  /// Per-spectrum average over the whole time grid, then mean and SE over spectra.
  double time_average_mean = 0.0;
  double time_average_se = 0.0;
};

/// purity_exact over GUE(n m) spectra drawn from RngStream(seed, s),
/// s = 0..spectra-1.
SpectralPurityAverage spectral_average_purity(const BipartiteDims& dims, std::span<const double> times,
                                              std::size_t spectra, std::uint64_t seed, unsigned workers = 1);

/// t_k = tmin + k (tmax - tmin)/(steps - 1) for steps >= 2; {tmin} for steps = 1.
std::vector<double> linear_grid(double tmin, double tmax, std::size_t steps);

}  // namespace rdmm
