// SPDX-License-Identifier: Apache-2.0
#include "rdmm/sim/rdmm.hpp"

#include <cmath>

#include "rdmm/core/error.hpp"
#include "rdmm/core/kernels.hpp"

namespace rdmm {

Propagator::Propagator(const HermitianMatrix& h, const CoefficientMatrix& a0) : dims_(a0.dims) {
  if (h.dim() != a0.dims.total()) throw DomainError("evolve: Hamiltonian dimension must equal n * m");
  eig_ = eigh(h);
  c0_ = adjoint_matvec(eig_.vectors, a0.a.flat());
}

CoefficientMatrix Propagator::at(double t) const {
  if (!std::isfinite(t)) throw DomainError("evolve: t must be finite");
  std::vector<Complex> c(c0_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = std::polar(1.0, -eig_.values[k] * t) * c0_[k];
  return {dims_, ComplexMatrix(dims_.n(), dims_.m(), matvec(eig_.vectors, c))};
}

CoefficientMatrix evolve(const HermitianMatrix& h, const CoefficientMatrix& a0, double t) {
  return Propagator(h, a0).at(t);
}

HermitianMatrix reduced_density(const CoefficientMatrix& a) { return gram_rows(a.a); }

double purity(const HermitianMatrix& rho) { return kernels::norm2(rho.matrix().flat()); }

SpectralScalars empirical_spectral_scalars(std::span<const double> energies, double t) {
  require(!energies.empty(), "spectral scalars: empty spectrum");
  const double inv = 1.0 / static_cast<double>(energies.size());
  SpectralScalars s;
  s.f_t = kernels::phase_sum_uniform(energies, t) * inv;
  s.f_2t = kernels::phase_sum_uniform(energies, 2.0 * t) * inv;
  const Complex f2 = s.f_t * s.f_t;
  s.v_t = 2.0 * (std::conj(f2) * s.f_2t).real();
  return s;
}

}  // namespace rdmm
