// SPDX-License-Identifier: Apache-2.0
#include "rdmm/haar/weingarten.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "rdmm/core/error.hpp"
#include "rdmm/core/linalg.hpp"
#include "rdmm/core/sampling.hpp"
#include "rdmm/sim/rdmm.hpp"

namespace rdmm {

namespace {

std::size_t perm_code(const Permutation& s) {
  std::size_t code = 0, base = 1;
  for (std::size_t i = 0; i < s.degree(); ++i, base *= s.degree()) code += static_cast<std::size_t>(s(i)) * base;
  return code;
}

}  // namespace

WeingartenTable::WeingartenTable(std::size_t p, std::size_t dim) : p_(p), dim_(dim) {
  require(p >= 1 && p <= 4, "weingarten_table: p must lie in 1..4");
  if (dim < p) throw DomainError("weingarten_table: Gram matrix is singular for dim < p");
  perms_ = all_permutations(p);
  const std::size_t np = perms_.size();
  std::size_t codes = 1;
  for (std::size_t i = 0; i < p; ++i) codes *= p;
  code_to_index_.assign(codes, -1);
  for (std::size_t i = 0; i < np; ++i) code_to_index_[perm_code(perms_[i])] = static_cast<int>(i);

  std::vector<std::size_t> cycles(np * np);
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) cycles[i * np + j] = (perms_[i] * perms_[j].inverse()).cycle_count();

  std::vector<double> g(np * np);
  for (std::size_t k = 0; k < np * np; ++k) g[k] = std::pow(static_cast<double>(dim), static_cast<double>(cycles[k]));
  std::vector<double> rhs(np, 0.0);
  rhs[index(Permutation::identity(p))] = 1.0;
  std::vector<lapack_int> ipiv(np);
  const auto n = static_cast<lapack_int>(np);
  const lapack_int info = LAPACKE_dgesv(LAPACK_ROW_MAJOR, n, 1, g.data(), n, ipiv.data(), rhs.data(), 1);
  if (info != 0) throw DomainError("weingarten_table: Gram matrix is singular");
  wg_ = std::move(rhs);

  quotient_.resize(np * np);
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) quotient_[i * np + j] = wg_[index(perms_[i] * perms_[j].inverse())];

  std::map<std::vector<int>, std::pair<double, double>> range;
  std::map<std::vector<int>, std::pair<double, int>> sums;
  for (std::size_t i = 0; i < np; ++i) {
    const auto ct = perms_[i].cycle_type();
    auto [it, fresh] = range.try_emplace(ct, wg_[i], wg_[i]);
    it->second.first = std::min(it->second.first, wg_[i]);
    it->second.second = std::max(it->second.second, wg_[i]);
    auto& s = sums[ct];
    s.first += wg_[i];
    s.second += 1;
  }
  for (const auto& [ct, r] : range) spread_ = std::max(spread_, r.second - r.first);
  for (const auto& [ct, s] : sums) classes_[ct] = s.first / s.second;
}

std::size_t WeingartenTable::index(const Permutation& s) const {
  require(s.degree() == p_, "weingarten: permutation degree mismatch");
  return static_cast<std::size_t>(code_to_index_[perm_code(s)]);
}

double WeingartenTable::orthogonality_defect() const {
  const std::size_t np = perms_.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < np; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < np; ++j) {
      const double c = static_cast<double>((perms_[i] * perms_[j].inverse()).cycle_count());
      s += std::pow(static_cast<double>(dim_), c) * wg_[j];
    }
    worst = std::max(worst, std::abs(s - (perms_[i].is_identity() ? 1.0 : 0.0)));
  }
  return worst;
}

WeingartenTable weingarten_table(std::size_t p, std::size_t dim) { return WeingartenTable(p, dim); }

double haar_moment(const IndexTuple& a, const IndexTuple& b, const IndexTuple& ap, const IndexTuple& bp,
                   const WeingartenTable& table) {
  const std::size_t p = a.size();
  if (b.size() != p || ap.size() != p || bp.size() != p) throw DomainError("haar_moment: tuple length mismatch");
  require(p == table.degree(), "haar_moment: table degree does not match tuple length");
  for (const auto* tup : {&a, &b, &ap, &bp})
    for (std::size_t x : *tup)
      if (x >= table.dim()) throw DomainError("haar_moment: index out of range");
  const auto& perms = table.permutations();
  auto matches = [&](const IndexTuple& u, const IndexTuple& v) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < perms.size(); ++k) {
      bool ok = true;
      for (std::size_t i = 0; i < p && ok; ++i) ok = u[i] == v[static_cast<std::size_t>(perms[k](i))];
      if (ok) out.push_back(k);
    }
    return out;
  };
  const auto sig = matches(a, ap);
  if (sig.empty()) return 0.0;
  const auto tau = matches(b, bp);
  double s = 0.0;
  for (std::size_t i : sig)
    for (std::size_t j : tau) s += table.value_of_quotient(i, j);
  return s;
}

double haar_moment(const IndexTuple& a, const IndexTuple& b, const IndexTuple& ap, const IndexTuple& bp,
                   std::size_t dim) {
  if (b.size() != a.size() || ap.size() != a.size() || bp.size() != a.size())
    throw DomainError("haar_moment: tuple length mismatch");
  return haar_moment(a, b, ap, bp, WeingartenTable(a.size(), dim));
}

McEstimate mc_haar_moment(const IndexTuple& a, const IndexTuple& b, const IndexTuple& ap, const IndexTuple& bp,
                          std::size_t dim, std::size_t samples, RngStream& rng) {
  const std::size_t p = a.size();
  if (b.size() != p || ap.size() != p || bp.size() != p) throw DomainError("mc_haar_moment: tuple length mismatch");
  require(samples >= 1000, "mc_haar_moment: need at least 1000 samples");
  for (const auto* tup : {&a, &b, &ap, &bp})
    for (std::size_t x : *tup)
      if (x >= dim) throw DomainError("mc_haar_moment: index out of range");
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const ComplexMatrix u = sample_haar_unitary(dim, rng);
    Complex m = 1.0;
    for (std::size_t i = 0; i < p; ++i) m *= u(a[i], b[i]) * std::conj(u(ap[i], bp[i]));
    sum += m.real();
    sum2 += m.real() * m.real();
  }
  const double ns = static_cast<double>(samples);
  const double mean = sum / ns;
  const double var = std::max(0.0, (sum2 - ns * mean * mean) / (ns - 1.0));
  return {mean, std::sqrt(var / ns)};
}

HermitianMatrix brute_force_avg_rho(const HermitianMatrix& rho0, std::span<const double> energies, double t,
                                    const BipartiteDims& dims) {
  const std::size_t n = dims.n(), m = dims.m(), d = dims.total();
  if (d > 12) throw ResourceError("brute_force_avg_rho: n m must be <= 12");
  require(rho0.dim() == n, "brute_force_avg_rho: rho0 must be n x n");
  require(energies.size() == d, "brute_force_avg_rho: need n m energies");
  const HermitianMatrix s = psd_sqrt(rho0);
  std::vector<std::pair<std::size_t, Complex>> psi0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t nu = 0; nu < n; ++nu)
      if (s(j, nu) != Complex{}) psi0.emplace_back(j * m + nu, s(j, nu));
  std::vector<Complex> ph(d);
  for (std::size_t k = 0; k < d; ++k) ph[k] = std::polar(1.0, -energies[k] * t);

  const WeingartenTable wg(2, d);
  ComplexMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Complex acc = 0.0;
      for (std::size_t nu = 0; nu < m; ++nu)
        for (std::size_t m1 = 0; m1 < d; ++m1)
          for (std::size_t m2 = 0; m2 < d; ++m2) {
            const Complex phase = ph[m1] * std::conj(ph[m2]);
            for (const auto& [y1, c1] : psi0)
              for (const auto& [y2, c2] : psi0) {
                const double w = haar_moment({j * m + nu, y2}, {m1, m2}, {y1, k * m + nu}, {m1, m2}, wg);
                if (w != 0.0) acc += w * phase * c1 * std::conj(c2);
              }
          }
      out(j, k) = acc;
    }
  return HermitianMatrix::symmetrized(out);
}

double brute_force_purity(const CoefficientMatrix& a0, std::span<const double> energies, double t) {
  const std::size_t n = a0.dims.n(), m = a0.dims.m(), d = a0.dims.total();
  if (d > 6) throw ResourceError("brute_force_purity: n m must be <= 6");
  require(energies.size() == d, "brute_force_purity: need n m energies");
  if (!is_product_state(a0)) throw UnsupportedError("brute_force_purity: initial state must be a product state");
  // Local unitaries leave the Haar average unchanged, so psi(0) = |0>|0>.
  const std::size_t y0 = 0;
  std::vector<Complex> ph(d);
  for (std::size_t k = 0; k < d; ++k) ph[k] = std::polar(1.0, -energies[k] * t);

  const WeingartenTable wg(4, d);
  Complex acc = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t nu = 0; nu < m; ++nu)
        for (std::size_t mu = 0; mu < m; ++mu) {
          const IndexTuple a{j * m + nu, y0, k * m + mu, y0};
          const IndexTuple ap{y0, k * m + nu, y0, j * m + mu};
          for (std::size_t m1 = 0; m1 < d; ++m1)
            for (std::size_t m2 = 0; m2 < d; ++m2)
              for (std::size_t m3 = 0; m3 < d; ++m3)
                for (std::size_t m4 = 0; m4 < d; ++m4) {
                  const IndexTuple b{m1, m2, m3, m4};
                  const double w = haar_moment(a, b, ap, b, wg);
                  if (w != 0.0) acc += w * ph[m1] * std::conj(ph[m2]) * ph[m3] * std::conj(ph[m4]);
                }
        }
  return acc.real();
}

}  // namespace rdmm
