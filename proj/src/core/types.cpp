// SPDX-License-Identifier: Apache-2.0
#include "rdmm/core/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdmm/core/error.hpp"
#include "rdmm/core/kernels.hpp"

namespace rdmm {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DomainError("ComplexMatrix: entry count != rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix sum: shape mismatch");
  kernels::axpy(1.0, other.flat(), flat());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix difference: shape mismatch");
  kernels::axpy(-1.0, other.flat(), flat());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  kernels::scale(s, flat());
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik != Complex{}) kernels::axpy(aik, b.row(k), ci);
    }
  }
  return c;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m, double tol) {
  if (m.rows() != m.cols()) throw DomainError("HermitianMatrix: matrix is not square");
  if (!m.all_finite()) throw DomainError("HermitianMatrix: non-finite entry");
  const double scale = std::max(1.0, m.max_abs());
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex d = m(i, j) - std::conj(m(j, i));
      if (std::abs(d) > tol * scale)
        throw DomainError("HermitianMatrix: entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") deviates from its adjoint by " + std::to_string(std::abs(d)));
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }
  m_ = std::move(m);
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  HermitianMatrix h;
  h.m_ = ComplexMatrix::identity(n);
  return h;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
  HermitianMatrix h(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) h.m_(i, i) = d[i];
  return h;
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("HermitianMatrix: matrix is not square");
  HermitianMatrix h(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    h.m_(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h.m_(i, j) = avg;
      h.m_(j, i) = std::conj(avg);
    }
  }
  return h;
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i).real();
  return t;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& other) {
  m_ += other.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

}  // namespace rdmm
