// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "rdmm/core/error.hpp"
#include "rdmm/core/kernels.hpp"
#include "rdmm/core/rng.hpp"

using namespace rdmm;
using namespace rdmm::kernels;

namespace {

std::vector<Complex> random_vec(std::size_t n, RngStream& r) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = r.complex_normal(1.0);
  return v;
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Avx2, Isa::Neon})
    if (isa_supported(isa)) out.push_back(isa);
  return out;
}

double rel(Complex a, Complex b, double scale) { return std::abs(a - b) / std::max(1.0, scale); }

}  // namespace

TEST_CASE("every vector ISA matches the scalar reference") {
  const KernelTable& ref = table(Isa::Scalar);
  RngStream r(21);
  for (Isa isa : available()) {
    CAPTURE(isa_name(isa));
    const KernelTable& k = table(isa);
    for (std::size_t n = 0; n <= 67; ++n) {
      CAPTURE(n);
      const auto x = random_vec(n, r), y = random_vec(n, r);
      const double sc = static_cast<double>(n);
      CHECK(rel(k.dotc(x.data(), y.data(), n), ref.dotc(x.data(), y.data(), n), sc) < 1e-14);
      CHECK(rel(k.dotu(x.data(), y.data(), n), ref.dotu(x.data(), y.data(), n), sc) < 1e-14);
      CHECK(std::abs(k.norm2(x.data(), n) - ref.norm2(x.data(), n)) < 1e-13 * std::max(1.0, sc));

      const Complex a(0.3, -1.7);
      auto y1 = y, y2 = y;
      k.axpy(a, x.data(), y1.data(), n);
      ref.axpy(a, x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) < 1e-14);
      y1 = y2 = y;
      k.axpy_conj(a, x.data(), y1.data(), n);
      ref.axpy_conj(a, x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) < 1e-14);

      std::vector<Complex> h1(n), h2(n);
      k.hadamard(x.data(), y.data(), h1.data(), n);
      ref.hadamard(x.data(), y.data(), h2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(h1[i] - h2[i]) < 1e-14);
      auto s1 = x, s2 = x;
      k.scale(a, s1.data(), n);
      ref.scale(a, s2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(s1[i] - s2[i]) < 1e-14);

      std::vector<double> e(n), w(n);
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = 4.0 * r.uniform() - 2.0;
        w[i] = r.uniform();
      }
      for (double t : {0.0, 0.37, -5.0, 123.4, 4.0e3}) {
        CHECK(rel(k.phase_sum(w.data(), e.data(), t, n), ref.phase_sum(w.data(), e.data(), t, n), sc) < 1e-13);
        CHECK(rel(k.phase_sum_uniform(e.data(), t, n), ref.phase_sum_uniform(e.data(), t, n), sc) < 1e-13);
      }
    }
  }
}

TEST_CASE("phase kernels fall back outside the reduced range") {
  RngStream r(22);
  const KernelTable& ref = table(Isa::Scalar);
  std::vector<double> e(16);
  for (auto& x : e) x = r.uniform();
  for (Isa isa : available()) {
    const KernelTable& k = table(isa);
    const double t = 5.0e7;
    CHECK(rel(k.phase_sum_uniform(e.data(), t, e.size()), ref.phase_sum_uniform(e.data(), t, e.size()), 16.0) < 1e-9);
  }
}

TEST_CASE("phase_sum against the closed form") {
  const std::vector<double> e{1.0, -1.0};
  for (double t : {0.0, 0.5, 2.0, 10.0}) {
    const Complex f = phase_sum_uniform(e, t) / 2.0;
    CHECK(f.real() == doctest::Approx(std::cos(t)));
    CHECK(std::abs(f.imag()) < 1e-15);
  }
}

TEST_CASE("dispatch switches and validates") {
  const Isa before = active_isa();
  set_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  const std::vector<Complex> x{{1, 2}, {3, 4}};
  CHECK(norm2(x) == 30.0);
  for (Isa isa : available()) {
    set_isa(isa);
    CHECK(active_isa() == isa);
    CHECK(norm2(x) == 30.0);
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon})
    if (!isa_supported(isa)) CHECK_THROWS_AS(set_isa(isa), UnsupportedError);
  set_isa(before);
  const std::vector<Complex> y{{1, 0}};
  CHECK_THROWS_AS(dotc(x, y), DomainError);
}

TEST_CASE("environment pins the scalar path") {
  const char* env = std::getenv("RDMM_KERNELS");
  if (env && std::string(env) == "scalar") CHECK(active_isa() == Isa::Scalar);
  else {
    const bool vector_cpu = isa_supported(Isa::Avx2) || isa_supported(Isa::Neon);
    CHECK((active_isa() != Isa::Scalar) == vector_cpu);
  }
}
