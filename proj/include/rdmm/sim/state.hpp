// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "rdmm/core/types.hpp"
#include "rdmm/sim/dims.hpp"

namespace rdmm {

enum class StateKind { Product, TwoSchmidt, LinearSchmidt, CustomSchmidt };

struct InitialStateSpec {
  StateKind kind = StateKind::Product;
  /// Weight of the second Schmidt vector for TwoSchmidt.
  double p = 0.5;
  /// Schmidt weights for CustomSchmidt.
  std::vector<double> weights;

  static InitialStateSpec product() { return {}; }
  static InitialStateSpec two_schmidt(double p) { return {StateKind::TwoSchmidt, p, {}}; }
  static InitialStateSpec linear() { return {StateKind::LinearSchmidt, 0.5, {}}; }
  static InitialStateSpec custom(std::vector<double> w) { return {StateKind::CustomSchmidt, 0.5, std::move(w)}; }
};

/// Expansion coefficients A (n x m) of a bipartite pure state, rho = A A^dagger.
struct CoefficientMatrix {
  BipartiteDims dims;
  ComplexMatrix a;
};

/// Schmidt weights of the state, descending position order as constructed
/// (entry j is the weight on |j>|j>). Length n.
///
/// TwoSchmidt(p) puts 1 - p on |0>|0> and p on |1>|1>. LinearSchmidt uses
/// 2 j / (n (n + 1)) for j = 1..n.
std::vector<double> schmidt_weights(const InitialStateSpec& spec, std::size_t n);

/// A_jj = sqrt(weight_j), zero elsewhere.
CoefficientMatrix make_initial_state(const InitialStateSpec& spec, const BipartiteDims& dims);

/// Wraps a given coefficient matrix; throws DomainError unless |A|_F = 1 within 1e-10.
CoefficientMatrix make_coefficients(const BipartiteDims& dims, ComplexMatrix a);

/// True when A has a single nonzero entry.
bool is_product_state(const CoefficientMatrix& a0);

}  // namespace rdmm
