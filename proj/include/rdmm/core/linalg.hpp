// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "rdmm/core/types.hpp"

namespace rdmm {

struct EigenSystem {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< column k is the eigenvector of values[k]
};

/// Hermitian eigendecomposition (LAPACK zheevd).
EigenSystem eigh(const HermitianMatrix& h);
/// Validates Hermiticity first; throws DomainError beyond tolerance.
EigenSystem eigh(const ComplexMatrix& h);
/// Eigenvalues only, ascending.
std::vector<double> eigvalsh(const HermitianMatrix& h);

struct TridiagonalEigen {
  std::vector<double> values;       ///< ascending
  std::vector<double> first_row;    ///< first component of each normalized eigenvector
};

/// Symmetric tridiagonal eigenvalues (LAPACK dsterf). offdiag.size() == diag.size() - 1.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> offdiag);
/// Eigenvalues plus first eigenvector components (LAPACK dstev).
TridiagonalEigen tridiagonal_eigh(std::vector<double> diag, std::vector<double> offdiag);

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-1e-8, 1e-12 * lambda_max] count as zero; anything more negative is a
/// DomainError.
HermitianMatrix psd_sqrt(const HermitianMatrix& xi);

/// a a^dagger for a rows x cols matrix.
HermitianMatrix gram_rows(const ComplexMatrix& a);
/// y = a x
std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x);
/// y = a^dagger x
std::vector<Complex> adjoint_matvec(const ComplexMatrix& a, std::span<const Complex> x);
/// Orthonormalizes the rows of a in place (classical Gram-Schmidt, two
/// passes). Produces the Q of a QR factorization with positive R diagonal.
void orthonormalize_rows(ComplexMatrix& a);

/// max |a - b|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |u u^dagger - 1|
double unitarity_defect(const ComplexMatrix& u);

}  // namespace rdmm
