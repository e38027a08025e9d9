// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rdmm/core/kernels.hpp"

namespace rdmm::kernels {

namespace scalar {
Complex dotc(const Complex* x, const Complex* y, std::size_t n);
Complex dotu(const Complex* x, const Complex* y, std::size_t n);
void axpy(Complex a, const Complex* x, Complex* y, std::size_t n);
void axpy_conj(Complex a, const Complex* x, Complex* y, std::size_t n);
double norm2(const Complex* x, std::size_t n);
void hadamard(const Complex* x, const Complex* y, Complex* out, std::size_t n);
void scale(Complex a, Complex* x, std::size_t n);
Complex phase_sum(const double* w, const double* e, double t, std::size_t n);
Complex phase_sum_uniform(const double* e, double t, std::size_t n);
}  // namespace scalar

const KernelTable& scalar_table();
#if defined(RDMM_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(RDMM_HAVE_NEON)
const KernelTable& neon_table();
#endif

}  // namespace rdmm::kernels
