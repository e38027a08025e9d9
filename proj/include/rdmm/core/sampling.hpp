// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "rdmm/core/rng.hpp"
#include "rdmm/core/types.hpp"

namespace rdmm {

/// i.i.d. circular complex Gaussian entries with E|X_jk|^2 = variance.
ComplexMatrix sample_ginibre(std::size_t rows, std::size_t cols, double variance, RngStream& rng);

/// GUE with off-diagonal E|H_jk|^2 = element_variance and real Gaussian diagonal
/// of the same variance. Defaults to 1/dim (spectral span 4).
HermitianMatrix sample_gue(std::size_t dim, RngStream& rng, std::optional<double> element_variance = {});

/// Haar unitary from a Ginibre matrix, QR with positive R diagonal.
ComplexMatrix sample_haar_unitary(std::size_t dim, RngStream& rng);

/// Leading block of the beta = 2 tridiagonal model of a GUE(dim, variance)
/// matrix: diagonal N(0, variance), k-th off-diagonal sqrt(variance * Gamma(dim - k, 1)).
struct TridiagonalBlock {
  std::vector<double> diag;
  std::vector<double> offdiag;
};
TridiagonalBlock sample_gue_tridiagonal(std::size_t dim, std::size_t block, double variance, RngStream& rng);

/// Full GUE spectrum in O(dim^2) via the tridiagonal model. Same law as
/// eigvalsh(sample_gue(dim, variance)).
std::vector<double> sample_gue_spectrum(std::size_t dim, RngStream& rng, std::optional<double> element_variance = {});

/// Discrete measure sum_k w_k delta(x - x_k).
struct SpectralMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss quadrature of the spectral measure of a GUE(dim) matrix at a
/// Haar-random unit vector, i.e. sum_m |u_m|^2 delta(x - E_m). The first
/// `block` rows of the tridiagonal model fix all moments up to degree
/// 2 block - 1, so exp(-i x tau) is integrated to machine precision for
/// |tau| well below block. With block >= dim the measure is exact.
SpectralMeasure sample_gue_spectral_measure(std::size_t dim, std::size_t block, RngStream& rng,
                                            std::optional<double> element_variance = {});

}  // namespace rdmm
