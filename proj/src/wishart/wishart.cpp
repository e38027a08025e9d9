// SPDX-License-Identifier: Apache-2.0
#include "rdmm/wishart/wishart.hpp"

#include <cmath>

#include "rdmm/core/error.hpp"
#include "rdmm/core/linalg.hpp"
#include "rdmm/core/sampling.hpp"
#include "rdmm/sim/rdmm.hpp"
#include "rdmm/theory/theory.hpp"

namespace rdmm {

namespace {

void check_h2(double h2) {
  if (!(h2 >= 0.0 && h2 <= 1.0)) throw DomainError("wishart: h2 must lie in [0, 1]");
}

HermitianMatrix clamp_psd(const HermitianMatrix& m) {
  const EigenSystem es = eigh(m);
  const double top = std::max(0.0, es.values.back());
  const std::size_t n = m.dim();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    double l = es.values[k];
    if (l < -1e-8) throw DomainError("wishart: xi is not positive semidefinite");
    if (l <= 1e-12 * top) l = 0.0;
    if (l == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = es.vectors(i, k) * l;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(es.vectors(j, k));
    }
  }
  return HermitianMatrix::symmetrized(out);
}

}  // namespace

WishartParams ncwe_params(const CoefficientMatrix& a0, double g, double h2, bool fixed_trace) {
  check_h2(h2);
  const BipartiteDims& d = a0.dims;
  const HermitianMatrix rho0 = reduced_density(a0);
  ComplexMatrix s2xi = avg_rho(rho0, h2, d).matrix();
  s2xi -= Complex(g * g) * rho0.matrix();
  s2xi *= Complex(1.0 / d.sigma2());
  WishartParams p;
  p.dims = d;
  p.y = Complex(g) * a0.a;
  p.xi = clamp_psd(HermitianMatrix::symmetrized(s2xi));
  p.fixed_trace = fixed_trace;
  return p;
}

WishartParams nwe_params(const CoefficientMatrix& a0, double g, double h2, bool fixed_trace) {
  check_h2(h2);
  WishartParams p;
  p.dims = a0.dims;
  p.y = Complex(g) * a0.a;
  p.xi = (1.0 - h2) * HermitianMatrix::identity(a0.dims.n());
  p.fixed_trace = fixed_trace;
  return p;
}

WishartParams cwe_params(const HermitianMatrix& rho0, double h2, const BipartiteDims& dims, bool fixed_trace) {
  check_h2(h2);
  WishartParams p;
  p.dims = dims;
  p.y = ComplexMatrix(dims.n(), dims.m());
  p.xi = clamp_psd((1.0 / dims.sigma2()) * avg_rho(rho0, h2, dims));
  p.fixed_trace = fixed_trace;
  return p;
}

WishartSampler::WishartSampler(WishartParams params) : p_(std::move(params)) {
  const std::size_t n = p_.dims.n();
  require(p_.y.rows() == n && p_.y.cols() == p_.dims.m(), "wishart: Y must be n x m");
  require(p_.xi.dim() == n, "wishart: xi must be n x n");
  // xi = c 1 skips the square root.
  xi_is_scalar_ = true;
  const double c = p_.xi(0, 0).real();
  for (std::size_t i = 0; i < n && xi_is_scalar_; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p_.xi(i, j) != (i == j ? Complex(c) : Complex())) {
        xi_is_scalar_ = false;
        break;
      }
  if (xi_is_scalar_) {
    if (c < 0.0) throw DomainError("wishart: xi is not positive semidefinite");
    xi_scale_ = std::sqrt(c);
  } else {
    sqrt_xi_ = psd_sqrt(p_.xi);
  }
}

HermitianMatrix WishartSampler::draw(RngStream& rng) const {
  const BipartiteDims& d = p_.dims;
  ComplexMatrix x = sample_ginibre(d.n(), d.m(), 1.0 / static_cast<double>(d.total()), rng);
  ComplexMatrix z = p_.y;
  if (xi_is_scalar_) {
    x *= Complex(xi_scale_);
    z += x;
  } else {
    z += sqrt_xi_.matrix() * x;
  }
  HermitianMatrix w = gram_rows(z);
  if (p_.fixed_trace) {
    const double tr = w.trace();
    if (tr > 0.0) w *= 1.0 / tr;
  }
  return w;
}

HermitianMatrix WishartSampler::mean() const {
  return gram_rows(p_.y) + p_.dims.sigma2() * p_.xi;
}

HermitianMatrix sample(const WishartParams& params, RngStream& rng) { return WishartSampler(params).draw(rng); }

}  // namespace rdmm
