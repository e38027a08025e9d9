// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rdmm {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<Complex> flat() { return data_; }
  std::span<const Complex> flat() const { return data_; }
  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }

  ComplexMatrix adjoint() const;
  /// Largest entry modulus.
  double max_abs() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
/// Matrix product.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian matrix. Construction checks the input against its adjoint and
/// stores the exact Hermitian part.
class HermitianMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t dim) : m_(dim, dim) {}
  /// Throws DomainError when max|m - m^dagger| exceeds tol * max(1, max|m|).
  explicit HermitianMatrix(ComplexMatrix m, double tol = kTolerance);

  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix diagonal(std::span<const double> d);
  /// Hermitian part (m + m^dagger)/2, no tolerance check.
  static HermitianMatrix symmetrized(const ComplexMatrix& m);

  std::size_t dim() const { return m_.rows(); }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ComplexMatrix& matrix() const { return m_; }
  double trace() const;

  HermitianMatrix& operator+=(const HermitianMatrix& other);
  HermitianMatrix& operator*=(double s);

 private:
  ComplexMatrix m_;
};

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, HermitianMatrix a);

}  // namespace rdmm
