// SPDX-License-Identifier: Apache-2.0
#include "rdmm/analysis/tracy_widom.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "rdmm/core/error.hpp"
#include "rdmm/core/special.hpp"

namespace rdmm {

namespace {

#include "tw2_table.inc"

// Fritsch-Carlson slope at node i of the uniform table.
double slope(std::size_t i) {
  const double h = kTw2Step;
  if (i == 0) return (kTw2Cdf[1] - kTw2Cdf[0]) / h;
  if (i == kTw2Count - 1) return (kTw2Cdf[i] - kTw2Cdf[i - 1]) / h;
  const double d0 = (kTw2Cdf[i] - kTw2Cdf[i - 1]) / h;
  const double d1 = (kTw2Cdf[i + 1] - kTw2Cdf[i]) / h;
  if (d0 * d1 <= 0.0) return 0.0;
  return 2.0 / (1.0 / d0 + 1.0 / d1);
}

}  // namespace

double tw2_cdf(double s) {
  if (std::isnan(s)) return s;
  const double smax = kTw2Min + kTw2Step * static_cast<double>(kTw2Count - 1);
  if (s <= kTw2Min) return 0.0;
  if (s >= smax) return 1.0;
  const double x = (s - kTw2Min) / kTw2Step;
  const std::size_t i = std::min(static_cast<std::size_t>(x), kTw2Count - 2);
  const double u = x - static_cast<double>(i);
  const double h = kTw2Step;
  const double y0 = kTw2Cdf[i], y1 = kTw2Cdf[i + 1];
  const double m0 = slope(i) * h, m1 = slope(i + 1) * h;
  const double u2 = u * u, u3 = u2 * u;
  const double v = (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * m0 + (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * m1;
  return std::clamp(v, 0.0, 1.0);
}

double tw2_quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("tw2_quantile: u must lie in (0, 1)");
  const double smax = kTw2Min + kTw2Step * static_cast<double>(kTw2Count - 1);
  if (u <= tw2_cdf(kTw2Min + 1e-12)) return kTw2Min;
  if (u >= tw2_cdf(smax - 1e-12)) return smax;
  return find_root([u](double s) { return tw2_cdf(s) - u; }, kTw2Min, smax, 1e-13);
}

}  // namespace rdmm
