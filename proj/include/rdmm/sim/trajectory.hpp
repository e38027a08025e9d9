// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "rdmm/core/rng.hpp"
#include "rdmm/core/sampling.hpp"
#include "rdmm/sim/state.hpp"

namespace rdmm {

/// How one realization of psi(t) = exp(-i H t) psi(0), H ~ GUE(NM), is drawn.
///
/// Dense diagonalizes a sampled H. Frame samples the same joint law of
/// (psi(t_0), ..., psi(t_k)) in O(NM k^2): the Gram matrix of the states is
/// alpha(t_b - t_a) with alpha the Fourier transform of the spectral measure
/// of H at psi(0), which comes from the tridiagonal model, and given the Gram
/// matrix the states are a Haar-random frame in the complement of psi(0).
enum class Backend { Auto, Dense, Frame };

/// Auto picks Dense up to this Hilbert-space dimension.
inline constexpr std::size_t kDenseAutoLimit = 512;

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view s);
Backend resolve_backend(Backend b, std::size_t total_dim);

using StateVisitor = std::function<void(std::size_t time_index, const CoefficientMatrix& a)>;

/// Draws one realization and calls visit(b, A(times[b])) for every b in order.
void sample_trajectory(Backend backend, const CoefficientMatrix& a0, std::span<const double> times, RngStream& rng,
                       const StateVisitor& visit);

/// Leading tridiagonal block size used by Frame for a largest lag tau_max.
std::size_t frame_block_size(std::size_t total_dim, double tau_max);

/// Upper-triangular R (rank x k) with G = R^dagger R for a Hermitian PSD
/// Gram matrix G (k x k, row-major). Columns whose residual pivot is
/// <= tol are dependent and produce no row.
ComplexMatrix semidefinite_cholesky(const ComplexMatrix& g, double tol = 1e-14);

}  // namespace rdmm
