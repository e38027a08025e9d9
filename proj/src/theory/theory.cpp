// SPDX-License-Identifier: Apache-2.0
#include "rdmm/theory/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rdmm/core/error.hpp"
#include "rdmm/core/special.hpp"

namespace rdmm {

double g_t(double t) {
  if (std::abs(t) < 1e-4) return 1.0 - 0.5 * t * t + t * t * t * t / 12.0;
  return bessel_j1(2.0 * t) / t;
}

EnsembleScalars gue_scalars(double t) {
  EnsembleScalars e;
  e.g_t = g_t(t);
  e.g_2t = g_t(2.0 * t);
  e.h2_t = e.g_t * e.g_t;
  return e;
}

HermitianMatrix avg_rho(const HermitianMatrix& rho0, double f_abs2, const BipartiteDims& dims) {
  if (!(f_abs2 >= 0.0 && f_abs2 <= 1.0)) throw DomainError("avg_rho: f_abs2 must lie in [0, 1]");
  require(rho0.dim() == dims.n(), "avg_rho: rho0 must be n x n");
  const double d = static_cast<double>(dims.total());
  const double m = static_cast<double>(dims.m());
  const double n = static_cast<double>(dims.n());
  const double den = d * d - 1.0;
  const double c_rho = (d * d * f_abs2 - 1.0) / den;
  const double c_id = n * m * m * (1.0 - f_abs2) / den;
  HermitianMatrix out = c_rho * rho0;
  out += c_id * HermitianMatrix::identity(dims.n());
  return out;
}

double i_random(std::size_t n, std::size_t m) {
  require(n >= 2 && m >= 2, "i_random: n and m must be >= 2");
  return static_cast<double>(n + m) / static_cast<double>(1 + n * m);
}

double i_random(const BipartiteDims& dims) { return i_random(dims.n(), dims.m()); }

double purity_exact(const SpectralScalars& s, std::size_t n, std::size_t m) {
  require(n >= 2 && m >= 2, "purity_exact: n and m must be >= 2");
  const double d = static_cast<double>(n * m);
  const double b = static_cast<double>((n - 1) * (m - 1)) / ((d + 3.0) * (d + 1.0) * (d - 1.0));
  const double f2 = std::norm(s.f_t);
  return i_random(n, m) + b * (d * d * f2 * f2 + d * s.v_t + std::norm(s.f_2t) - 4.0 * f2);
}

double purity_exact(const SpectralScalars& s, const BipartiteDims& dims) {
  return purity_exact(s, dims.n(), dims.m());
}

double purity_long_time(std::size_t n, std::size_t m) {
  const double d = static_cast<double>(n * m);
  return i_random(n, m) + 2.0 * static_cast<double>((n - 1) * (m - 1)) / (d * (d + 3.0) * (d + 1.0));
}

double purity_asymptotic(double g, double g_2t, const BipartiteDims& dims) {
  const double d = static_cast<double>(dims.total());
  const double g4 = g * g * g * g;
  return g4 + (1.0 - g4) * static_cast<double>(dims.n() + dims.m()) / d + 2.0 * (g * g * g_2t - g4) / d;
}

SpikeResult lambda1_mean(double r, const BipartiteDims& dims) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("lambda1_mean: r must lie in [0, 1]");
  const double n = static_cast<double>(dims.n());
  const double k = dims.kappa();
  SpikeResult s;
  s.threshold = 1.0 / (n * std::sqrt(k));
  s.separated = r > s.threshold;
  s.mean = s.separated ? dims.sigma2() * (n * r + 1.0 - r) * (n * r * k + 1.0 - r) / (n * r * k)
                       : std::numeric_limits<double>::quiet_NaN();
  return s;
}

MPBulk::MPBulk(double r, const BipartiteDims& dims) : r_(r), kappa_(dims.kappa()), sigma2_(dims.sigma2()) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("mp_bulk: r must lie in [0, 1)");
  if (r == 1.0) throw DomainError("mp_bulk: r = 1 leaves no bulk");
  const double s = (1.0 - r_) * sigma2_;
  const double q = 1.0 / std::sqrt(kappa_);
  lo_ = s * (q - 1.0) * (q - 1.0);
  hi_ = s * (q + 1.0) * (q + 1.0);
}

double MPBulk::density(double lambda) const {
  if (!(lambda > lo_ && lambda < hi_)) return 0.0;
  return kappa_ * std::sqrt((hi_ - lambda) * (lambda - lo_)) / (2.0 * std::numbers::pi * lambda * (1.0 - r_) * sigma2_);
}

double MPBulk::cdf(double lambda) const {
  if (lambda <= lo_) return 0.0;
  if (lambda >= hi_) return 1.0;
  // lambda = lo + (hi - lo)(1 - cos th)/2 removes both square-root endpoints.
  static constexpr double x[10] = {0.0765265211334973, 0.2277858511416451, 0.3737060887154195, 0.5108670019508271,
                                   0.6360536807265150, 0.7463319064601508, 0.8391169718222188, 0.9122344282513259,
                                   0.9639719272779138, 0.9931285991850949};
  static constexpr double w[10] = {0.1527533871307258, 0.1491729864726037, 0.1420961093183820, 0.1316886384491766,
                                   0.1181945319615184, 0.1019301198172404, 0.0832767415767048, 0.0626720483341091,
                                   0.0406014298003869, 0.0176140071391521};
  const double half = 0.5 * (hi_ - lo_);
  const double theta = std::acos(std::clamp(1.0 - (lambda - lo_) / half, -1.0, 1.0));
  auto f = [&](double th) {
    const double l = lo_ + half * (1.0 - std::cos(th));
    const double s = std::sin(th);
    return kappa_ * half * s * half * s / (2.0 * std::numbers::pi * l * (1.0 - r_) * sigma2_);
  };
  // Composite 20-point Gauss-Legendre over 8 panels.
  constexpr int panels = 8;
  double sum = 0.0;
  const double hp = theta / panels;
  for (int p = 0; p < panels; ++p) {
    const double c = (p + 0.5) * hp;
    for (int i = 0; i < 10; ++i) sum += w[i] * (f(c - 0.5 * hp * x[i]) + f(c + 0.5 * hp * x[i]));
  }
  return std::clamp(0.5 * hp * sum, 0.0, 1.0);
}

MPBulk mp_bulk(double r, const BipartiteDims& dims) { return MPBulk(r, dims); }

double lambda1_variance(double g, double g_2t, const BipartiteDims& dims) {
  const double g2 = g * g;
  return (2.0 * g2 + 2.0 * g2 * g_2t - 4.0 * g2 * g2) / static_cast<double>(dims.total());
}

ConvergenceTimes convergence_time(const BipartiteDims& dims, double accuracy) {
  (void)dims;
  if (!(accuracy > 0.0)) throw DomainError("convergence_time: accuracy must be > 0");
  if (accuracy >= 1.0) return {};
  ConvergenceTimes c;
  // g decreases monotonically from 1 to 0 on [0, t1].
  const double level = std::pow(accuracy, 0.25);
  const double t1 = 0.5 * bessel_j1_zero(1);
  c.first_passage = find_root([&](double t) { return g_t(t) - level; }, 0.0, t1);
  c.envelope_time = std::pow(std::numbers::pi * std::numbers::pi * accuracy, -1.0 / 6.0);
  return c;
}

ConvergenceTimes convergence_time(const BipartiteDims& dims) { return convergence_time(dims, dims.sigma2()); }

}  // namespace rdmm
