// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace rdmm {

/// Bessel function of the first kind, order one.
double bessel_j1(double x);

/// k-th positive zero of J1 (k >= 1).
double bessel_j1_zero(int k);

/// Root of f in [a, b] with f(a) f(b) <= 0 (Brent). Throws DomainError when
/// the interval does not bracket a sign change.
double find_root(const std::function<double(double)>& f, double a, double b, double xtol = 1e-15);

}  // namespace rdmm
