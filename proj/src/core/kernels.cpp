// SPDX-License-Identifier: Apache-2.0
#include "rdmm/core/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"
#include "rdmm/core/error.hpp"

namespace rdmm::kernels {
namespace {

Isa detect() {
  if (const char* env = std::getenv("RDMM_KERNELS"); env && std::string(env) == "scalar") return Isa::Scalar;
#if defined(RDMM_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
#if defined(RDMM_HAVE_NEON)
  return Isa::Neon;
#endif
  return Isa::Scalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> ptr{&table(detect())};
  return ptr;
}

std::atomic<Isa>& current_isa() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

inline const KernelTable& k() { return *current().load(std::memory_order_relaxed); }

void check_len(std::size_t a, std::size_t b) {
  if (a != b) throw DomainError("kernel: operand lengths differ");
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(RDMM_HAVE_AVX2)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(RDMM_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!isa_supported(isa)) throw UnsupportedError("kernel ISA not available: " + std::string(isa_name(isa)));
  switch (isa) {
#if defined(RDMM_HAVE_AVX2)
    case Isa::Avx2: return avx2_table();
#endif
#if defined(RDMM_HAVE_NEON)
    case Isa::Neon: return neon_table();
#endif
    default: return scalar_table();
  }
}

Isa active_isa() { return current_isa().load(); }

void set_isa(Isa isa) {
  const KernelTable& t = table(isa);
  current().store(&t);
  current_isa().store(isa);
}

Complex dotc(std::span<const Complex> x, std::span<const Complex> y) {
  check_len(x.size(), y.size());
  return k().dotc(x.data(), y.data(), x.size());
}

Complex dotu(std::span<const Complex> x, std::span<const Complex> y) {
  check_len(x.size(), y.size());
  return k().dotu(x.data(), y.data(), x.size());
}

void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y) {
  check_len(x.size(), y.size());
  k().axpy(a, x.data(), y.data(), x.size());
}

void axpy_conj(Complex a, std::span<const Complex> x, std::span<Complex> y) {
  check_len(x.size(), y.size());
  k().axpy_conj(a, x.data(), y.data(), x.size());
}

double norm2(std::span<const Complex> x) { return k().norm2(x.data(), x.size()); }

void hadamard(std::span<const Complex> x, std::span<const Complex> y, std::span<Complex> out) {
  check_len(x.size(), y.size());
  check_len(x.size(), out.size());
  k().hadamard(x.data(), y.data(), out.data(), x.size());
}

void scale(Complex a, std::span<Complex> x) { k().scale(a, x.data(), x.size()); }

Complex phase_sum(std::span<const double> w, std::span<const double> e, double t) {
  if (w.size() != e.size()) throw DomainError("phase_sum: weight and energy lengths differ");
  return k().phase_sum(w.data(), e.data(), t, e.size());
}

Complex phase_sum_uniform(std::span<const double> e, double t) {
  return k().phase_sum_uniform(e.data(), t, e.size());
}

}  // namespace rdmm::kernels
