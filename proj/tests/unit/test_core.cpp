// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rdmm/core/error.hpp"
#include "rdmm/core/linalg.hpp"
#include "rdmm/core/rng.hpp"
#include "rdmm/core/sampling.hpp"
#include "rdmm/core/special.hpp"

using namespace rdmm;

namespace {

double semicircle_cdf(double x) {
  x = std::clamp(x, -2.0, 2.0);
  return 0.5 + (x * std::sqrt(4.0 - x * x) / 4.0 + std::asin(x / 2.0)) / std::numbers::pi;
}

double ks(std::vector<double> x, double (*cdf)(double)) {
  std::sort(x.begin(), x.end());
  double d = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max({d, (i + 1) / n - cdf(x[i]), cdf(x[i]) - i / n});
  return d;
}

ComplexMatrix reconstruct(const EigenSystem& es) {
  const std::size_t n = es.values.size();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j) += es.vectors(i, k) * es.values[k] * std::conj(es.vectors(j, k));
  return out;
}

}  // namespace

TEST_CASE("rng: identical streams repeat, distinct streams differ") {
  RngStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
  }
  RngStream e(7, 0);
  const auto s1 = e.substream(1).next_u64();
  CHECK(s1 == e.substream(1).next_u64());
  CHECK(s1 != e.substream(2).next_u64());
}

TEST_CASE("rng: normal, complex normal and gamma moments") {
  RngStream r(1);
  const int n = 200000;
  double m = 0, v = 0, c2 = 0, g = 0, g2 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = r.normal();
    m += x;
    v += x * x;
    c2 += std::norm(r.complex_normal(0.5));
    const double y = r.gamma(2.5);
    g += y;
    g2 += y * y;
  }
  CHECK(std::abs(m / n) < 4.0 / std::sqrt(n));
  CHECK(std::abs(v / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(c2 / n - 0.5) < 4.0 * 0.5 / std::sqrt(n));
  CHECK(std::abs(g / n - 2.5) < 4.0 * std::sqrt(2.5 / n));
  CHECK(std::abs(g2 / n - (g / n) * (g / n) - 2.5) < 0.06);
  RngStream s(2);
  for (int i = 0; i < 1000; ++i) CHECK(s.gamma(0.3) > 0.0);
}

TEST_CASE("sample_ginibre: zero mean and variance") {
  RngStream r(11);
  const int reps = 4000;
  Complex mean = 0.0;
  double m2 = 0.0;
  for (int s = 0; s < reps; ++s) {
    const ComplexMatrix x = sample_ginibre(4, 4, 1.0 / 16.0, r);
    for (const auto& z : x.flat()) {
      mean += z;
      m2 += std::norm(z);
    }
  }
  const double cnt = 16.0 * reps;
  CHECK(std::abs(mean / cnt) < 4.0 / std::sqrt(16.0 * cnt));
  CHECK(std::abs(m2 / cnt - 1.0 / 16.0) < 4.0 * (1.0 / 16.0) / std::sqrt(cnt));
  const ComplexMatrix z = sample_ginibre(3, 2, 0.0, r);
  CHECK(z.max_abs() == 0.0);
  CHECK_THROWS_AS(sample_ginibre(3, 2, -1.0, r), DomainError);
  CHECK_THROWS_AS(sample_ginibre(0, 2, 1.0, r), DomainError);
}

TEST_CASE("sample_gue: hermitian, span 4, semicircle") {
  RngStream r(5);
  const HermitianMatrix h = sample_gue(64, r);
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = 0; j < 64; ++j) CHECK(h(i, j) == std::conj(h(j, i)));
  CHECK_THROWS_AS(sample_gue(1, r), DomainError);

  const auto e = eigvalsh(sample_gue(1024, r));
  CHECK(std::abs((e.back() - e.front()) - 4.0) < 0.2);
  CHECK(ks(e, semicircle_cdf) < 0.05);

  const auto e256 = eigvalsh(sample_gue(256, r));
  CHECK(std::abs((e256.back() - e256.front()) / 255.0 * 256.0 / 4.0 - 1.0) < 0.05);
  // Heisenberg time 2 pi / spacing at the band centre.
  const auto central = std::count_if(e256.begin(), e256.end(), [](double x) { return std::abs(x) < 0.25; });
  const double t_h = 2.0 * std::numbers::pi * static_cast<double>(central) / 0.5;
  CHECK(std::abs(t_h / (2.0 * 256.0) - 1.0) < 0.1);
}

TEST_CASE("sample_gue: off-diagonal and diagonal variance") {
  RngStream r(6);
  double off = 0.0, diag = 0.0;
  const int reps = 400;
  for (int s = 0; s < reps; ++s) {
    const HermitianMatrix h = sample_gue(16, r);
    for (std::size_t i = 0; i < 16; ++i) {
      diag += std::norm(h(i, i));
      for (std::size_t j = i + 1; j < 16; ++j) off += std::norm(h(i, j));
    }
  }
  CHECK(std::abs(off / (reps * 120.0) * 16.0 - 1.0) < 0.02);
  CHECK(std::abs(diag / (reps * 16.0) * 16.0 - 1.0) < 0.05);
}

TEST_CASE("tridiagonal GUE spectrum matches the dense law") {
  RngStream r(8);
  std::vector<double> a, b;
  for (int s = 0; s < 40; ++s) {
    const auto x = sample_gue_spectrum(128, r);
    a.insert(a.end(), x.begin(), x.end());
    const auto y = eigvalsh(sample_gue(128, r));
    b.insert(b.end(), y.begin(), y.end());
  }
  CHECK(ks(a, semicircle_cdf) < 0.02);
  CHECK(ks(b, semicircle_cdf) < 0.02);
  // Largest eigenvalue means agree.
  double ma = 0, mb = 0;
  for (int s = 0; s < 200; ++s) {
    ma += sample_gue_spectrum(64, r).back();
    mb += eigvalsh(sample_gue(64, r)).back();
  }
  CHECK(std::abs(ma - mb) / 200.0 < 0.02);
}

TEST_CASE("spectral measure: weights sum to one and moments match") {
  RngStream r(9);
  const auto mu = sample_gue_spectral_measure(4096, 30, r);
  double w = 0.0, m2 = 0.0;
  for (std::size_t k = 0; k < mu.weights.size(); ++k) {
    w += mu.weights[k];
    m2 += mu.weights[k] * mu.nodes[k] * mu.nodes[k];
  }
  CHECK(w == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(m2 == doctest::Approx(1.0).epsilon(0.05));
  const auto full = sample_gue_spectral_measure(32, 100, r);
  CHECK(full.nodes.size() == 32);
}

TEST_CASE("sample_haar_unitary: unitarity and first moment") {
  RngStream r(3);
  CHECK(unitarity_defect(sample_haar_unitary(8, r)) < 1e-12);
  const ComplexMatrix u1 = sample_haar_unitary(1, r);
  CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-15);
  const int n = 100000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = std::norm(sample_haar_unitary(4, r)(0, 0));
    s += x;
    s2 += x * x;
  }
  const double mean = s / n;
  const double se = std::sqrt((s2 / n - mean * mean) / n);
  CHECK(std::abs(mean - 0.25) < 3.0 * se);
}

TEST_CASE("eigh: examples and reconstruction") {
  const std::vector<double> d{3.0, -1.0, 2.0};
  const EigenSystem es = eigh(HermitianMatrix::diagonal(d));
  CHECK(es.values == std::vector<double>{-1.0, 2.0, 3.0});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK((std::abs(es.vectors(i, j)) == 0.0 || std::abs(es.vectors(i, j)) == 1.0));

  ComplexMatrix x(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  const auto e2 = eigh(x).values;
  CHECK(e2[0] == doctest::Approx(-1.0));
  CHECK(e2[1] == doctest::Approx(1.0));

  RngStream r(4);
  const HermitianMatrix h = sample_gue(64, r);
  const EigenSystem eg = eigh(h);
  CHECK(max_abs_diff(reconstruct(eg), h.matrix()) < 1e-10 * std::max(1.0, h.matrix().max_abs()));
  CHECK(unitarity_defect(eg.vectors.adjoint()) < 1e-10);

  ComplexMatrix bad(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh(bad), DomainError);
}

TEST_CASE("psd_sqrt: examples") {
  CHECK(max_abs_diff(psd_sqrt(HermitianMatrix::identity(4)).matrix(), ComplexMatrix::identity(4)) < 1e-14);
  const std::vector<double> d{4.0, 9.0};
  const HermitianMatrix s = psd_sqrt(HermitianMatrix::diagonal(d));
  CHECK(s(0, 0).real() == doctest::Approx(2.0));
  CHECK(s(1, 1).real() == doctest::Approx(3.0));
  CHECK(std::abs(s(0, 1)) < 1e-14);

  ComplexMatrix xi(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) xi(i, j) = i == j ? 1.0 : 0.5;
  const HermitianMatrix r = psd_sqrt(HermitianMatrix(xi));
  CHECK(max_abs_diff(r.matrix() * r.matrix(), xi) < 1e-10);

  // rank-deficient input: J has one nonzero eigenvalue
  ComplexMatrix j(4, 4);
  for (auto& z : j.flat()) z = 1.0;
  const HermitianMatrix sj = psd_sqrt(HermitianMatrix(j));
  CHECK(max_abs_diff(sj.matrix() * sj.matrix(), j) < 1e-10);

  const std::vector<double> neg{1.0, -1e-6};
  CHECK_THROWS_AS(psd_sqrt(HermitianMatrix::diagonal(neg)), DomainError);
}

TEST_CASE("bessel_j1: values, zeros and accuracy") {
  CHECK(bessel_j1(0.0) == 0.0);
  CHECK(bessel_j1(1.0) == doctest::Approx(0.4400505857).epsilon(1e-9));
  CHECK(std::abs(bessel_j1(1.0) - 0.44005058574493351596) < 1e-14);
  CHECK(std::abs(bessel_j1(3.8317059702)) < 1e-9);
  double worst = 0.0;
  for (double x = -80.0; x <= 80.0; x += 0.01731) {
    const double ref = boost::math::cyl_bessel_j(1, x);
    worst = std::max(worst, std::abs(bessel_j1(x) - ref));
  }
  CHECK(worst < 1e-12);
  for (int k = 1; k <= 20; ++k)
    CHECK(bessel_j1_zero(k) == doctest::Approx(boost::math::cyl_bessel_j_zero(1.0, k)).epsilon(1e-13));
  CHECK(bessel_j1(-2.0) == doctest::Approx(-bessel_j1(2.0)));
}

TEST_CASE("find_root: bracket and convergence") {
  const double r = find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0);
  CHECK(std::abs(r - std::sqrt(2.0)) < 1e-14);
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), DomainError);
}

TEST_CASE("orthonormalize_rows gives positive R diagonal") {
  RngStream r(12);
  ComplexMatrix a = sample_ginibre(3, 5, 1.0, r);
  const ComplexMatrix orig = a;
  orthonormalize_rows(a);
  for (std::size_t i = 0; i < 3; ++i) {
    // <q_i, a_i> is the R diagonal entry
    Complex d = 0.0;
    for (std::size_t k = 0; k < 5; ++k) d += std::conj(a(i, k)) * orig(i, k);
    CHECK(d.real() > 0.0);
    CHECK(std::abs(d.imag()) < 1e-12);
  }
}

TEST_CASE("hermitian matrix tolerance check") {
  ComplexMatrix m(2, 2);
  m(0, 1) = Complex(1.0, 1e-14);
  m(1, 0) = 1.0;
  CHECK_NOTHROW(HermitianMatrix{m});
  m(0, 1) = Complex(1.0, 1e-6);
  CHECK_THROWS_AS(HermitianMatrix{m}, DomainError);
}

TEST_CASE("determinism: identical streams give identical matrices") {
  RngStream a(99, 1), b(99, 1);
  CHECK(sample_gue(32, a).matrix() == sample_gue(32, b).matrix());
  CHECK(sample_haar_unitary(8, a) == sample_haar_unitary(8, b));
}
