// SPDX-License-Identifier: Apache-2.0
#include "rdmm/core/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <algorithm>

#include "rdmm/core/error.hpp"

namespace rdmm {

namespace {

double j1_series(double x) {
  const double h = 0.5 * x;
  const double h2 = h * h;
  double term = h;
  double sum = term;
  for (int k = 1; k < 60; ++k) {
    term *= -h2 / (static_cast<double>(k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Backward recurrence normalized by J0 + 2 sum J_2k = 1.
double j1_miller(double x) {
  int n = static_cast<int>(x) + 40;
  if (n % 2) ++n;
  double jp1 = 0.0;
  double j = 1e-300;
  double norm = 0.0;
  double j1 = 0.0;
  for (int k = n; k >= 1; --k) {
    const double jm1 = (2.0 * k / x) * j - jp1;
    jp1 = j;
    j = jm1;
    // j now holds J_{k-1}
    if (k - 1 == 1) j1 = j;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * j;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp1 *= 1e-250;
      j1 *= 1e-250;
      norm *= 1e-250;
    }
  }
  norm += j;
  return j1 / norm;
}

double j1_hankel(double x) {
  const double mu = 4.0;
  const double z = 8.0 * x;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * z);
    if (std::abs(term) > last) break;
    last = std::abs(term);
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (last < 1e-17) break;
  }
  const double chi = x - 0.75 * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j1(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  double r;
  if (ax <= 4.0)
    r = j1_series(ax);
  else if (ax <= 30.0)
    r = j1_miller(ax);
  else
    r = j1_hankel(ax);
  return x < 0 ? -r : r;
}

double bessel_j1_zero(int k) {
  require(k >= 1, "bessel_j1_zero: k must be >= 1");
  const double b = (k + 0.25) * std::numbers::pi;
  const double b8 = 8.0 * b;
  const double guess = b - 3.0 / b8 - 4.0 * 3.0 * (28.0 - 31.0) / (3.0 * b8 * b8 * b8);
  return find_root(bessel_j1, guess - 0.3, guess + 0.3);
}

double find_root(const std::function<double(double)>& f, double a, double b, double xtol) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0)) throw DomainError("find_root: interval does not bracket a root");
  double c = a, fc = fa, d = b - a, e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0 ? tol : -tol);
    fb = f(b);
  }
  return b;
}

}  // namespace rdmm
