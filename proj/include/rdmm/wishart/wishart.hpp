// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rdmm/core/rng.hpp"
#include "rdmm/core/types.hpp"
#include "rdmm/sim/state.hpp"

namespace rdmm {

/// W = Z Z^dagger with Z = Y + sqrt(xi) X, X Ginibre of variance 1/(n m).
struct WishartParams {
  BipartiteDims dims{2, 2};
  ComplexMatrix y;
  HermitianMatrix xi;
  /// Rescale every draw to unit trace.
  bool fixed_trace = false;
};

/// Y = g A(0), sigma^2 xi = <rho(t)>(h2) - g^2 rho(0).
WishartParams ncwe_params(const CoefficientMatrix& a0, double g, double h2, bool fixed_trace = false);
/// Y = g A(0), xi = (1 - h2) 1.
WishartParams nwe_params(const CoefficientMatrix& a0, double g, double h2, bool fixed_trace = false);
/// Y = 0, sigma^2 xi = <rho(t)>(h2).
WishartParams cwe_params(const HermitianMatrix& rho0, double h2, const BipartiteDims& dims, bool fixed_trace = false);

/// Draws one W. Uses sqrt(xi), computed once per call; use WishartSampler
/// for repeated draws.
HermitianMatrix sample(const WishartParams& params, RngStream& rng);

class WishartSampler {
 public:
  explicit WishartSampler(WishartParams params);
  HermitianMatrix draw(RngStream& rng) const;
  const WishartParams& params() const { return p_; }
  /// Y Y^dagger + xi / n
  HermitianMatrix mean() const;

 private:
  WishartParams p_;
  HermitianMatrix sqrt_xi_;
  bool xi_is_scalar_ = false;
  double xi_scale_ = 0.0;
};

}  // namespace rdmm
