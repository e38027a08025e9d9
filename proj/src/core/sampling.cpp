// SPDX-License-Identifier: Apache-2.0
#include "rdmm/core/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "rdmm/core/error.hpp"
#include "rdmm/core/linalg.hpp"

namespace rdmm {

ComplexMatrix sample_ginibre(std::size_t rows, std::size_t cols, double variance, RngStream& rng) {
  require(rows >= 1 && cols >= 1, "sample_ginibre: rows and cols must be >= 1");
  if (!(variance >= 0.0)) throw DomainError("sample_ginibre: variance must be nonnegative");
  ComplexMatrix x(rows, cols);
  if (variance == 0.0) return x;
  for (auto& z : x.flat()) z = rng.complex_normal(variance);
  return x;
}

HermitianMatrix sample_gue(std::size_t dim, RngStream& rng, std::optional<double> element_variance) {
  require(dim >= 2, "sample_gue: dim must be >= 2");
  const double v = element_variance.value_or(1.0 / static_cast<double>(dim));
  if (!(v >= 0.0)) throw DomainError("sample_gue: variance must be nonnegative");
  const double sd = std::sqrt(v);
  ComplexMatrix h(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    h(j, j) = sd * rng.normal();
    for (std::size_t k = j + 1; k < dim; ++k) {
      h(j, k) = rng.complex_normal(v);
      h(k, j) = std::conj(h(j, k));
    }
  }
  return HermitianMatrix(std::move(h));
}

ComplexMatrix sample_haar_unitary(std::size_t dim, RngStream& rng) {
  require(dim >= 1, "sample_haar_unitary: dim must be >= 1");
  ComplexMatrix u = sample_ginibre(dim, dim, 1.0, rng);
  orthonormalize_rows(u);
  return u;
}

TridiagonalBlock sample_gue_tridiagonal(std::size_t dim, std::size_t block, double variance, RngStream& rng) {
  require(dim >= 1, "sample_gue_tridiagonal: dim must be >= 1");
  const std::size_t l = std::clamp<std::size_t>(block, 1, dim);
  const double sd = std::sqrt(variance);
  TridiagonalBlock t;
  t.diag.resize(l);
  t.offdiag.resize(l - 1);
  for (std::size_t k = 0; k < l; ++k) t.diag[k] = sd * rng.normal();
  for (std::size_t k = 1; k < l; ++k)
    t.offdiag[k - 1] = std::sqrt(variance * rng.gamma(static_cast<double>(dim - k)));
  return t;
}

std::vector<double> sample_gue_spectrum(std::size_t dim, RngStream& rng, std::optional<double> element_variance) {
  require(dim >= 2, "sample_gue_spectrum: dim must be >= 2");
  const double v = element_variance.value_or(1.0 / static_cast<double>(dim));
  TridiagonalBlock t = sample_gue_tridiagonal(dim, dim, v, rng);
  return tridiagonal_eigenvalues(std::move(t.diag), std::move(t.offdiag));
}

SpectralMeasure sample_gue_spectral_measure(std::size_t dim, std::size_t block, RngStream& rng,
                                            std::optional<double> element_variance) {
  require(dim >= 1, "sample_gue_spectral_measure: dim must be >= 1");
  const double v = element_variance.value_or(1.0 / static_cast<double>(dim));
  TridiagonalBlock t = sample_gue_tridiagonal(dim, block, v, rng);
  TridiagonalEigen te = tridiagonal_eigh(std::move(t.diag), std::move(t.offdiag));
  SpectralMeasure m;
  m.nodes = std::move(te.values);
  m.weights.resize(te.first_row.size());
  for (std::size_t k = 0; k < m.weights.size(); ++k) m.weights[k] = te.first_row[k] * te.first_row[k];
  return m;
}

}  // namespace rdmm
