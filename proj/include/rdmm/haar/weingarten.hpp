// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "rdmm/core/rng.hpp"
#include "rdmm/core/types.hpp"
#include "rdmm/haar/permutation.hpp"
#include "rdmm/sim/state.hpp"

namespace rdmm {

/// Unitary Weingarten function Wg(dim, pi) for pi in S_p, read off the
/// inverse of the Gram matrix G(sigma, tau) = dim^#cycles(sigma tau^-1).
class WeingartenTable {
 public:
  WeingartenTable(std::size_t p, std::size_t dim);

  std::size_t degree() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Permutation>& permutations() const { return perms_; }
  std::size_t index(const Permutation& s) const;

  double value(const Permutation& s) const { return wg_[index(s)]; }
  double value(std::size_t perm_index) const { return wg_[perm_index]; }
  /// Wg(sigma_i tau_j^-1)
  double value_of_quotient(std::size_t i, std::size_t j) const { return quotient_[i * perms_.size() + j]; }
  /// Mean value per cycle type.
  const std::map<std::vector<int>, double>& by_cycle_type() const { return classes_; }

  /// Largest spread of Wg inside one cycle type.
  double class_spread() const { return spread_; }
  /// max over sigma of |sum_tau G(sigma, tau) Wg(tau) - delta(sigma = id)|
  double orthogonality_defect() const;

 private:
  std::size_t p_;
  std::size_t dim_;
  std::vector<Permutation> perms_;
  std::vector<int> code_to_index_;
  std::vector<double> wg_;
  std::vector<double> quotient_;
  std::map<std::vector<int>, double> classes_;
  double spread_ = 0.0;
};

/// p in 1..4, dim >= p.
WeingartenTable weingarten_table(std::size_t p, std::size_t dim);

using IndexTuple = std::vector<std::size_t>;

/// <V_{a1 b1} ... V_{ap bp} conj(V_{a'1 b'1}) ... conj(V_{a'p b'p})> over Haar V,
/// = sum_{sigma, tau} delta(a = a' o sigma) delta(b = b' o tau) Wg(sigma tau^-1).
/// Indices are 0-based.
double haar_moment(const IndexTuple& a, const IndexTuple& b, const IndexTuple& ap, const IndexTuple& bp,
                   std::size_t dim);
double haar_moment(const IndexTuple& a, const IndexTuple& b, const IndexTuple& ap, const IndexTuple& bp,
                   const WeingartenTable& table);

struct McEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};

/// Real part of the monomial averaged over sample_haar_unitary draws.
McEstimate mc_haar_moment(const IndexTuple& a, const IndexTuple& b, const IndexTuple& ap, const IndexTuple& bp,
                          std::size_t dim, std::size_t samples, RngStream& rng);

/// <rho(t)> over Haar eigenvectors for a fixed spectrum, summed term by term
/// from p = 2 moments with the purification A(0) = [sqrt(rho0), 0].
/// Limited to n m <= 12.
HermitianMatrix brute_force_avg_rho(const HermitianMatrix& rho0, std::span<const double> energies, double t,
                                    const BipartiteDims& dims);

/// <tr rho(t)^2> over Haar eigenvectors for a product initial state, from
/// p = 4 moments. Limited to n m <= 6.
double brute_force_purity(const CoefficientMatrix& a0, std::span<const double> energies, double t);

}  // namespace rdmm
