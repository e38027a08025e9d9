// SPDX-License-Identifier: Apache-2.0
// AVX2 + FMA kernels. Two complex<double> per __m256d, interleaved re/im.
#include <immintrin.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace rdmm::kernels {
namespace {

inline const double* dp(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(Complex* p) { return reinterpret_cast<double*>(p); }

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// sum of even lanes minus sum of odd lanes
inline double halt(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_sub_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

Complex dotc(const Complex* x, const Complex* y, std::size_t n) {
  __m256d a1 = _mm256_setzero_pd(), a2 = _mm256_setzero_pd();
  __m256d b1 = _mm256_setzero_pd(), b2 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(dp(x + i)), y0 = _mm256_loadu_pd(dp(y + i));
    const __m256d x1 = _mm256_loadu_pd(dp(x + i + 2)), y1 = _mm256_loadu_pd(dp(y + i + 2));
    a1 = _mm256_fmadd_pd(x0, y0, a1);
    a2 = _mm256_fmadd_pd(x0, swap_pairs(y0), a2);
    b1 = _mm256_fmadd_pd(x1, y1, b1);
    b2 = _mm256_fmadd_pd(x1, swap_pairs(y1), b2);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = _mm256_loadu_pd(dp(x + i)), y0 = _mm256_loadu_pd(dp(y + i));
    a1 = _mm256_fmadd_pd(x0, y0, a1);
    a2 = _mm256_fmadd_pd(x0, swap_pairs(y0), a2);
  }
  a1 = _mm256_add_pd(a1, b1);
  a2 = _mm256_add_pd(a2, b2);
  Complex s{hsum(a1), halt(a2)};
  if (i < n) s += scalar::dotc(x + i, y + i, n - i);
  return s;
}

Complex dotu(const Complex* x, const Complex* y, std::size_t n) {
  __m256d a1 = _mm256_setzero_pd(), a2 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = _mm256_loadu_pd(dp(x + i)), y0 = _mm256_loadu_pd(dp(y + i));
    a1 = _mm256_fmadd_pd(x0, y0, a1);
    a2 = _mm256_fmadd_pd(x0, swap_pairs(y0), a2);
  }
  Complex s{halt(a1), hsum(a2)};
  if (i < n) s += scalar::dotu(x + i, y + i, n - i);
  return s;
}

inline __m256d cmul_const(__m256d re, __m256d im, __m256d x) {
  return _mm256_fmaddsub_pd(re, x, _mm256_mul_pd(im, swap_pairs(x)));
}

void axpy(Complex a, const Complex* x, Complex* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(dp(x + i));
    _mm256_storeu_pd(dp(y + i), _mm256_add_pd(_mm256_loadu_pd(dp(y + i)), cmul_const(ar, ai, xv)));
  }
  if (i < n) scalar::axpy(a, x + i, y + i, n - i);
}

void axpy_conj(Complex a, const Complex* x, Complex* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_xor_pd(_mm256_loadu_pd(dp(x + i)), conj_mask);
    _mm256_storeu_pd(dp(y + i), _mm256_add_pd(_mm256_loadu_pd(dp(y + i)), cmul_const(ar, ai, xv)));
  }
  if (i < n) scalar::axpy_conj(a, x + i, y + i, n - i);
}

double norm2(const Complex* x, std::size_t n) {
  __m256d a = _mm256_setzero_pd(), b = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(dp(x + i)), x1 = _mm256_loadu_pd(dp(x + i + 2));
    a = _mm256_fmadd_pd(x0, x0, a);
    b = _mm256_fmadd_pd(x1, x1, b);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = _mm256_loadu_pd(dp(x + i));
    a = _mm256_fmadd_pd(x0, x0, a);
  }
  double s = hsum(_mm256_add_pd(a, b));
  if (i < n) s += scalar::norm2(x + i, n - i);
  return s;
}

void hadamard(const Complex* x, const Complex* y, Complex* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(dp(x + i)), yv = _mm256_loadu_pd(dp(y + i));
    const __m256d xr = _mm256_movedup_pd(xv), xi = _mm256_permute_pd(xv, 0b1111);
    _mm256_storeu_pd(dp(out + i), cmul_const(xr, xi, yv));
  }
  if (i < n) scalar::hadamard(x + i, y + i, out + i, n - i);
}

void scale(Complex a, Complex* x, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    _mm256_storeu_pd(dp(x + i), cmul_const(ar, ai, _mm256_loadu_pd(dp(x + i))));
  if (i < n) scalar::scale(a, x + i, n - i);
}

// Cody-Waite reduction by pi/4 and the Cephes minimax polynomials on
// [-pi/4, pi/4]. Valid for |x| < kMaxArg.
constexpr double kMaxArg = 1.0e7;
constexpr double kDP1 = 7.85398125648498535156e-1;
constexpr double kDP2 = 3.77489470793079817668e-8;
constexpr double kDP3 = 2.69515142907905952645e-15;

inline void sincos4(__m256d x, __m256d& s, __m256d& c) {
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d x_sign = _mm256_and_pd(x, sign_bit);
  const __m256d ax = _mm256_andnot_pd(sign_bit, x);
  __m256d y = _mm256_floor_pd(_mm256_mul_pd(ax, _mm256_set1_pd(4.0 / 3.14159265358979323846)));
  // make the octant even
  const __m256d half_y = _mm256_mul_pd(y, _mm256_set1_pd(0.5));
  const __m256d odd = _mm256_sub_pd(y, _mm256_add_pd(_mm256_floor_pd(half_y), _mm256_floor_pd(half_y)));
  y = _mm256_add_pd(y, odd);
  const __m256d oct = _mm256_sub_pd(y, _mm256_mul_pd(_mm256_set1_pd(8.0),
                                                     _mm256_floor_pd(_mm256_mul_pd(y, _mm256_set1_pd(0.125)))));
  __m256d z = _mm256_fnmadd_pd(y, _mm256_set1_pd(kDP1), ax);
  z = _mm256_fnmadd_pd(y, _mm256_set1_pd(kDP2), z);
  z = _mm256_fnmadd_pd(y, _mm256_set1_pd(kDP3), z);
  const __m256d zz = _mm256_mul_pd(z, z);

  __m256d ps = _mm256_set1_pd(1.58962301576546568060e-10);
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-2.50507477628578072866e-8));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(2.75573136213857245213e-6));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.98412698295895385996e-4));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(8.33333333332211858878e-3));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.66666666666666307295e-1));
  ps = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), ps, z);

  __m256d pc = _mm256_set1_pd(-1.13585365213876817300e-11);
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.08757008419747316778e-9));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-2.75573141792967388112e-7));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.48015872888517045348e-5));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-1.38888888888730564116e-3));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(4.16666666666665929218e-2));
  pc = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), pc, _mm256_fnmadd_pd(_mm256_set1_pd(0.5), zz, _mm256_set1_pd(1.0)));

  // octant 0: ( ps,  pc)  2: ( pc, -ps)  4: (-ps, -pc)  6: (-pc,  ps)
  const __m256d swap = _mm256_or_pd(_mm256_cmp_pd(oct, _mm256_set1_pd(2.0), _CMP_EQ_OQ),
                                    _mm256_cmp_pd(oct, _mm256_set1_pd(6.0), _CMP_EQ_OQ));
  const __m256d sin_neg = _mm256_and_pd(_mm256_cmp_pd(oct, _mm256_set1_pd(4.0), _CMP_GE_OQ), sign_bit);
  const __m256d cos_neg = _mm256_and_pd(_mm256_or_pd(_mm256_cmp_pd(oct, _mm256_set1_pd(2.0), _CMP_EQ_OQ),
                                                     _mm256_cmp_pd(oct, _mm256_set1_pd(4.0), _CMP_EQ_OQ)),
                                        sign_bit);
  s = _mm256_xor_pd(_mm256_xor_pd(_mm256_blendv_pd(ps, pc, swap), sin_neg), x_sign);
  c = _mm256_xor_pd(_mm256_blendv_pd(pc, ps, swap), cos_neg);
}

inline bool in_range(__m256d th) {
  const __m256d ath = _mm256_andnot_pd(_mm256_set1_pd(-0.0), th);
  return _mm256_movemask_pd(_mm256_cmp_pd(ath, _mm256_set1_pd(kMaxArg), _CMP_LT_OQ)) == 0xF;
}

Complex phase_sum(const double* w, const double* e, double t, std::size_t n) {
  const __m256d tv = _mm256_set1_pd(t);
  __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
  Complex tail{};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d th = _mm256_mul_pd(_mm256_loadu_pd(e + i), tv);
    if (!in_range(th)) {
      tail += scalar::phase_sum(w + i, e + i, t, 4);
      continue;
    }
    __m256d s, c;
    sincos4(th, s, c);
    const __m256d wv = _mm256_loadu_pd(w + i);
    re = _mm256_fmadd_pd(wv, c, re);
    im = _mm256_fnmadd_pd(wv, s, im);
  }
  if (i < n) tail += scalar::phase_sum(w + i, e + i, t, n - i);
  return Complex{hsum(re), hsum(im)} + tail;
}

Complex phase_sum_uniform(const double* e, double t, std::size_t n) {
  const __m256d tv = _mm256_set1_pd(t);
  __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
  Complex tail{};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d th = _mm256_mul_pd(_mm256_loadu_pd(e + i), tv);
    if (!in_range(th)) {
      tail += scalar::phase_sum_uniform(e + i, t, 4);
      continue;
    }
    __m256d s, c;
    sincos4(th, s, c);
    re = _mm256_add_pd(re, c);
    im = _mm256_sub_pd(im, s);
  }
  if (i < n) tail += scalar::phase_sum_uniform(e + i, t, n - i);
  return Complex{hsum(re), hsum(im)} + tail;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{dotc, dotu, axpy, axpy_conj, norm2, hadamard, scale, phase_sum, phase_sum_uniform};
  return table;
}

}  // namespace rdmm::kernels
