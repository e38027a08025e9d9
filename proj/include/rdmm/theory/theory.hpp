// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "rdmm/core/types.hpp"
#include "rdmm/sim/dims.hpp"
#include "rdmm/theory/scalars.hpp"

namespace rdmm {

/// GUE form factor J1(2t)/t, g(0) = 1.
double g_t(double t);
/// g_t, g_2t and h2_t = g_t^2.
EnsembleScalars gue_scalars(double t);

/// Haar average of rho(t) given |f_t|^2:
/// (D^2 f - 1)/(D^2 - 1) rho0 + n m^2 (1 - f)/(D^2 - 1) 1, D = n m.
HermitianMatrix avg_rho(const HermitianMatrix& rho0, double f_abs2, const BipartiteDims& dims);

/// (n + m)/(1 + n m)
double i_random(const BipartiteDims& dims);
double i_random(std::size_t n, std::size_t m);

/// Haar-averaged purity of an initial product state for a fixed spectrum.
/// The (n, m) overload accepts n > m.
double purity_exact(const SpectralScalars& s, const BipartiteDims& dims);
double purity_exact(const SpectralScalars& s, std::size_t n, std::size_t m);

/// Long-time value of purity_exact for a nondegenerate spectrum:
/// I_r + 2 (n-1)(m-1) / (D (D+3)(D+1)).
double purity_long_time(std::size_t n, std::size_t m);

/// g^4 + (1 - g^4)(n + m)/D + 2 (g^2 g_2t - g^4)/D
double purity_asymptotic(double g, double g_2t, const BipartiteDims& dims);

struct SpikeResult {
  bool separated = false;
  /// NaN when not separated.
  double mean = 0.0;
  /// 1 / (n sqrt(kappa))
  double threshold = 0.0;
};

/// Mean of the isolated largest eigenvalue, sigma^2 (n r + 1 - r)(n r kappa + 1 - r)/(n r kappa),
/// reported only for r > threshold.
SpikeResult lambda1_mean(double r, const BipartiteDims& dims);

/// Marchenko-Pastur bulk with variance rescaled by (1 - r).
class MPBulk {
 public:
  MPBulk(double r, const BipartiteDims& dims);

  double lambda_minus() const { return lo_; }
  double lambda_plus() const { return hi_; }
  double r() const { return r_; }
  double kappa() const { return kappa_; }
  double sigma2() const { return sigma2_; }

  double density(double lambda) const;
  double cdf(double lambda) const;

 private:
  double r_, kappa_, sigma2_, lo_, hi_;
};

MPBulk mp_bulk(double r, const BipartiteDims& dims);

/// (2 g^2 + 2 g^2 g_2t - 4 g^4) / (n m)
double lambda1_variance(double g, double g_2t, const BipartiteDims& dims);

struct ConvergenceTimes {
  /// Smallest t with g_t^4 <= accuracy.
  double first_passage = 0.0;
  /// Time after which the envelope t^(-3/2)/sqrt(pi) keeps g_t^4 <= accuracy.
  double envelope_time = 0.0;
};

ConvergenceTimes convergence_time(const BipartiteDims& dims, double accuracy);
/// accuracy = 1/n
ConvergenceTimes convergence_time(const BipartiteDims& dims);

}  // namespace rdmm
