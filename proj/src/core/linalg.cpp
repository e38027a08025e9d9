// SPDX-License-Identifier: Apache-2.0
#include "rdmm/core/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "rdmm/core/error.hpp"
#include "rdmm/core/kernels.hpp"

namespace rdmm {
namespace {

lapack_complex_double* lc(Complex* p) { return reinterpret_cast<lapack_complex_double*>(p); }

void check_info(lapack_int info, const char* routine) {
  if (info != 0) throw std::runtime_error(std::string(routine) + " failed, info = " + std::to_string(info));
}

}  // namespace

EigenSystem eigh(const HermitianMatrix& h) {
  const auto n = static_cast<lapack_int>(h.dim());
  EigenSystem es;
  es.values.resize(h.dim());
  es.vectors = h.matrix();
  if (n == 0) return es;
  check_info(LAPACKE_zheevd(LAPACK_ROW_MAJOR, 'V', 'U', n, lc(es.vectors.data()), n, es.values.data()), "zheevd");
  return es;
}

EigenSystem eigh(const ComplexMatrix& h) { return eigh(HermitianMatrix(h)); }

std::vector<double> eigvalsh(const HermitianMatrix& h) {
  const auto n = static_cast<lapack_int>(h.dim());
  std::vector<double> w(h.dim());
  if (n == 0) return w;
  ComplexMatrix a = h.matrix();
  check_info(LAPACKE_zheevd(LAPACK_ROW_MAJOR, 'N', 'U', n, lc(a.data()), n, w.data()), "zheevd");
  return w;
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> offdiag) {
  if (diag.empty()) return diag;
  if (offdiag.size() + 1 != diag.size()) throw DomainError("tridiagonal: offdiag must have n-1 entries");
  offdiag.push_back(0.0);
  check_info(LAPACKE_dsterf(static_cast<lapack_int>(diag.size()), diag.data(), offdiag.data()), "dsterf");
  return diag;
}

TridiagonalEigen tridiagonal_eigh(std::vector<double> diag, std::vector<double> offdiag) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (offdiag.size() + 1 != n) throw DomainError("tridiagonal: offdiag must have n-1 entries");
  offdiag.push_back(0.0);
  std::vector<double> z(n * n);
  const auto ln = static_cast<lapack_int>(n);
  check_info(LAPACKE_dstevd(LAPACK_ROW_MAJOR, 'V', ln, diag.data(), offdiag.data(), z.data(), ln), "dstevd");
  TridiagonalEigen out;
  out.values = std::move(diag);
  out.first_row.assign(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

HermitianMatrix psd_sqrt(const HermitianMatrix& xi) {
  const std::size_t n = xi.dim();
  EigenSystem es = eigh(xi);
  const double top = es.values.empty() ? 0.0 : std::max(0.0, es.values.back());
  const double clamp = 1e-12 * top;
  std::vector<double> root(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = es.values[k];
    if (lam < -1e-8) throw DomainError("psd_sqrt: matrix is not positive semidefinite (eigenvalue " +
                                       std::to_string(lam) + ")");
    root[k] = lam <= clamp ? 0.0 : std::sqrt(lam);
  }
  // S = V diag(root) V^dagger
  ComplexMatrix s(n, n);
  ComplexMatrix vr(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) vr(i, k) = es.vectors(i, k) * std::sqrt(root[k]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Complex v = kernels::dotc(vr.row(j), vr.row(i));
      s(i, j) = v;
      s(j, i) = std::conj(v);
    }
  return HermitianMatrix::symmetrized(s);
}

HermitianMatrix gram_rows(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex v = kernels::dotc(a.row(j), a.row(i));
      g(i, j) = v;
      g(j, i) = std::conj(v);
    }
    g(i, i) = g(i, i).real();
  }
  return HermitianMatrix::symmetrized(g);
}

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x) {
  if (x.size() != a.cols()) throw DomainError("matvec: dimension mismatch");
  std::vector<Complex> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = kernels::dotu(a.row(i), x);
  return y;
}

std::vector<Complex> adjoint_matvec(const ComplexMatrix& a, std::span<const Complex> x) {
  if (x.size() != a.rows()) throw DomainError("adjoint_matvec: dimension mismatch");
  std::vector<Complex> y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (x[i] != Complex{}) kernels::axpy_conj(x[i], a.row(i), y);
  return y;
}

void orthonormalize_rows(ComplexMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ri = a.row(i);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < i; ++j) {
        const Complex c = kernels::dotc(a.row(j), ri);
        kernels::axpy(-c, a.row(j), ri);
      }
    }
    const double nrm = std::sqrt(kernels::norm2(ri));
    if (!(nrm > 0.0)) throw DomainError("orthonormalize_rows: rows are linearly dependent");
    kernels::scale(1.0 / nrm, ri);
  }
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.flat()[i] - b.flat()[i]));
  return m;
}

double unitarity_defect(const ComplexMatrix& u) {
  const HermitianMatrix g = gram_rows(u);
  return max_abs_diff(g.matrix(), ComplexMatrix::identity(u.rows()));
}

}  // namespace rdmm
