// SPDX-License-Identifier: Apache-2.0
// NEON kernels, one complex<double> per float64x2_t. Phase sums use the
// scalar reference.
#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace rdmm::kernels {
namespace {

inline const double* dp(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(Complex* p) { return reinterpret_cast<double*>(p); }

inline float64x2_t swap_pair(float64x2_t v) { return vextq_f64(v, v, 1); }

// (a + ib) * (c + id) for a = [ar, ar], b = [ai, ai]
inline float64x2_t cmul_split(float64x2_t ar, float64x2_t ai, float64x2_t y) {
  const float64x2_t sign = {-1.0, 1.0};
  return vfmaq_f64(vmulq_f64(ar, y), vmulq_f64(ai, swap_pair(y)), sign);
}

Complex dotc(const Complex* x, const Complex* y, std::size_t n) {
  float64x2_t a1 = vdupq_n_f64(0.0), a2 = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(dp(x + i)), yv = vld1q_f64(dp(y + i));
    a1 = vfmaq_f64(a1, xv, yv);
    a2 = vfmaq_f64(a2, xv, swap_pair(yv));
  }
  return {vgetq_lane_f64(a1, 0) + vgetq_lane_f64(a1, 1), vgetq_lane_f64(a2, 0) - vgetq_lane_f64(a2, 1)};
}

Complex dotu(const Complex* x, const Complex* y, std::size_t n) {
  float64x2_t a1 = vdupq_n_f64(0.0), a2 = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(dp(x + i)), yv = vld1q_f64(dp(y + i));
    a1 = vfmaq_f64(a1, xv, yv);
    a2 = vfmaq_f64(a2, xv, swap_pair(yv));
  }
  return {vgetq_lane_f64(a1, 0) - vgetq_lane_f64(a1, 1), vgetq_lane_f64(a2, 0) + vgetq_lane_f64(a2, 1)};
}

void axpy(Complex a, const Complex* x, Complex* y, std::size_t n) {
  const float64x2_t ar = vdupq_n_f64(a.real()), ai = vdupq_n_f64(a.imag());
  for (std::size_t i = 0; i < n; ++i)
    vst1q_f64(dp(y + i), vaddq_f64(vld1q_f64(dp(y + i)), cmul_split(ar, ai, vld1q_f64(dp(x + i)))));
}

void axpy_conj(Complex a, const Complex* x, Complex* y, std::size_t n) {
  const float64x2_t ar = vdupq_n_f64(a.real()), ai = vdupq_n_f64(a.imag());
  const float64x2_t conj = {1.0, -1.0};
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vmulq_f64(vld1q_f64(dp(x + i)), conj);
    vst1q_f64(dp(y + i), vaddq_f64(vld1q_f64(dp(y + i)), cmul_split(ar, ai, xv)));
  }
}

double norm2(const Complex* x, std::size_t n) {
  float64x2_t a = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(dp(x + i));
    a = vfmaq_f64(a, xv, xv);
  }
  return vgetq_lane_f64(a, 0) + vgetq_lane_f64(a, 1);
}

void hadamard(const Complex* x, const Complex* y, Complex* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(dp(x + i));
    const float64x2_t r = cmul_split(vdupq_laneq_f64(xv, 0), vdupq_laneq_f64(xv, 1), vld1q_f64(dp(y + i)));
    vst1q_f64(dp(out + i), r);
  }
}

void scale(Complex a, Complex* x, std::size_t n) {
  const float64x2_t ar = vdupq_n_f64(a.real()), ai = vdupq_n_f64(a.imag());
  for (std::size_t i = 0; i < n; ++i) vst1q_f64(dp(x + i), cmul_split(ar, ai, vld1q_f64(dp(x + i))));
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{dotc,  dotu,     axpy,  axpy_conj, norm2, hadamard,
                                 scale, scalar::phase_sum, scalar::phase_sum_uniform};
  return table;
}

}  // namespace rdmm::kernels
