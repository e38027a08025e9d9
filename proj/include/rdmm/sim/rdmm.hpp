// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "rdmm/core/linalg.hpp"
#include "rdmm/core/types.hpp"
#include "rdmm/sim/state.hpp"
#include "rdmm/theory/scalars.hpp"

namespace rdmm {

/// exp(-i H t) applied to a fixed initial state, reusing one
/// eigendecomposition of H for every t.
class Propagator {
 public:
  Propagator(const HermitianMatrix& h, const CoefficientMatrix& a0);

  CoefficientMatrix at(double t) const;
  const std::vector<double>& energies() const { return eig_.values; }

 private:
  EigenSystem eig_;
  BipartiteDims dims_;
  std::vector<Complex> c0_;
};

/// vec(A(t)) = V exp(-i E t) V^dagger vec(A(0)), vec row-major over (j, nu).
CoefficientMatrix evolve(const HermitianMatrix& h, const CoefficientMatrix& a0, double t);

/// rho = A A^dagger
HermitianMatrix reduced_density(const CoefficientMatrix& a);

/// tr rho^2
double purity(const HermitianMatrix& rho);

SpectralScalars empirical_spectral_scalars(std::span<const double> energies, double t);

}  // namespace rdmm
