// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rdmm/sim/dims.hpp"

namespace rdmm {

struct ResolventOptions {
  /// <= 0 selects 1e-4 * lambda_plus of the uncorrelated bulk.
  double eps = 0.0;
  double damping = 0.5;
  std::size_t max_iter = 20000;
  double tolerance = 1e-10;
  unsigned workers = 1;
};

struct ResolventDensity {
  std::vector<double> grid;
  std::vector<double> density;
  /// 1 where |F(G) - G| < tolerance was reached.
  std::vector<char> converged;
  std::vector<double> residual;
  double eps = 0.0;

  std::size_t failures() const;
};

/// Density Im G(z)/pi at z = lambda - i eps, where
/// G = (1/n) sum_j 1/(z - (sigma^2/kappa)(kappa - 1 + z G) xi_j).
/// Damped fixed point from G = 1/z, then Newton on the points that did not
/// converge. Failures are flagged per point.
ResolventDensity resolvent_density(std::span<const double> xi_eigs, const BipartiteDims& dims,
                                   std::span<const double> grid, const ResolventOptions& opt = {});

}  // namespace rdmm
