// SPDX-License-Identifier: Apache-2.0
#include "rdmm/sim/state.hpp"

#include <cmath>
#include <numeric>

#include "rdmm/core/error.hpp"
#include "rdmm/core/kernels.hpp"

namespace rdmm {

std::vector<double> schmidt_weights(const InitialStateSpec& spec, std::size_t n) {
  std::vector<double> w(n, 0.0);
  switch (spec.kind) {
    case StateKind::Product:
      w[0] = 1.0;
      break;
    case StateKind::TwoSchmidt:
      if (!(spec.p > 0.0 && spec.p < 1.0)) throw DomainError("two-schmidt: p must lie in (0, 1)");
      require(n >= 2, "two-schmidt: n must be >= 2");
      w[0] = 1.0 - spec.p;
      w[1] = spec.p;
      break;
    case StateKind::LinearSchmidt: {
      const double norm = 2.0 / (static_cast<double>(n) * static_cast<double>(n + 1));
      for (std::size_t j = 0; j < n; ++j) w[j] = norm * static_cast<double>(j + 1);
      break;
    }
    case StateKind::CustomSchmidt: {
      if (spec.weights.empty() || spec.weights.size() > n)
        throw DomainError("custom state: need between 1 and n weights");
      for (double x : spec.weights)
        if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("custom state: weights must be finite and >= 0");
      const double sum = std::accumulate(spec.weights.begin(), spec.weights.end(), 0.0);
      if (std::abs(sum - 1.0) > 1e-12) throw DomainError("custom state: weights must sum to 1");
      std::copy(spec.weights.begin(), spec.weights.end(), w.begin());
      break;
    }
  }
  return w;
}

CoefficientMatrix make_initial_state(const InitialStateSpec& spec, const BipartiteDims& dims) {
  const auto w = schmidt_weights(spec, dims.n());
  ComplexMatrix a(dims.n(), dims.m());
  for (std::size_t j = 0; j < dims.n(); ++j) a(j, j) = std::sqrt(w[j]);
  return {dims, std::move(a)};
}

CoefficientMatrix make_coefficients(const BipartiteDims& dims, ComplexMatrix a) {
  require(a.rows() == dims.n() && a.cols() == dims.m(), "coefficients: shape must be n x m");
  require(a.all_finite(), "coefficients: entries must be finite");
  if (std::abs(kernels::norm2(a.flat()) - 1.0) > 1e-10) throw DomainError("coefficients: state is not normalized");
  return {dims, std::move(a)};
}

bool is_product_state(const CoefficientMatrix& a0) {
  // rank one <=> tr rho^2 = 1
  const std::size_t n = a0.a.rows();
  double tr2 = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) tr2 += std::norm(kernels::dotc(a0.a.row(k), a0.a.row(j)));
  return std::abs(tr2 - 1.0) < 1e-10;
}

}  // namespace rdmm
