// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "kernels_impl.hpp"

namespace rdmm::kernels {
namespace scalar {

Complex dotc(const Complex* x, const Complex* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

Complex dotu(const Complex* x, const Complex* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy(Complex a, const Complex* x, Complex* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void axpy_conj(Complex a, const Complex* x, Complex* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * std::conj(x[i]);
}

double norm2(const Complex* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

void hadamard(const Complex* x, const Complex* y, Complex* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void scale(Complex a, Complex* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

Complex phase_sum(const double* w, const double* e, double t, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double th = e[i] * t;
    re += w[i] * std::cos(th);
    im -= w[i] * std::sin(th);
  }
  return {re, im};
}

Complex phase_sum_uniform(const double* e, double t, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double th = e[i] * t;
    re += std::cos(th);
    im -= std::sin(th);
  }
  return {re, im};
}

}  // namespace scalar

const KernelTable& scalar_table() {
  static const KernelTable table{scalar::dotc,     scalar::dotu,  scalar::axpy,
                                 scalar::axpy_conj, scalar::norm2, scalar::hadamard,
                                 scalar::scale,     scalar::phase_sum, scalar::phase_sum_uniform};
  return table;
}

}  // namespace rdmm::kernels
