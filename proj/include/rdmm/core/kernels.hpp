// SPDX-License-Identifier: Apache-2.0
#pragma once

// Inner-loop kernels on contiguous complex<double> arrays.
//
// Every kernel has a scalar reference implementation; AVX2+FMA (x86-64) and
// NEON (aarch64) variants are chosen once at first use from the running CPU.
// RDMM_KERNELS=scalar in the environment pins the scalar path.

#include <cstddef>
#include <span>
#include <string_view>

#include "rdmm/core/types.hpp"

namespace rdmm::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();
/// Switches the dispatch table. Throws UnsupportedError if the CPU lacks it.
void set_isa(Isa isa);

/// sum conj(x_i) y_i
Complex dotc(std::span<const Complex> x, std::span<const Complex> y);
/// sum x_i y_i
Complex dotu(std::span<const Complex> x, std::span<const Complex> y);
/// y += a x
void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y);
/// y += a conj(x)
void axpy_conj(Complex a, std::span<const Complex> x, std::span<Complex> y);
/// sum |x_i|^2
double norm2(std::span<const Complex> x);
/// out_i = x_i y_i (out may alias x or y)
void hadamard(std::span<const Complex> x, std::span<const Complex> y, std::span<Complex> out);
/// x *= a
void scale(Complex a, std::span<Complex> x);
/// sum w_i exp(-i e_i t)
Complex phase_sum(std::span<const double> w, std::span<const double> e, double t);
/// sum exp(-i e_i t)
Complex phase_sum_uniform(std::span<const double> e, double t);

/// Raw per-ISA entry points. Lengths are element counts.
struct KernelTable {
  Complex (*dotc)(const Complex*, const Complex*, std::size_t);
  Complex (*dotu)(const Complex*, const Complex*, std::size_t);
  void (*axpy)(Complex, const Complex*, Complex*, std::size_t);
  void (*axpy_conj)(Complex, const Complex*, Complex*, std::size_t);
  double (*norm2)(const Complex*, std::size_t);
  void (*hadamard)(const Complex*, const Complex*, Complex*, std::size_t);
  void (*scale)(Complex, Complex*, std::size_t);
  Complex (*phase_sum)(const double*, const double*, double, std::size_t);
  Complex (*phase_sum_uniform)(const double*, double, std::size_t);
};

const KernelTable& table(Isa isa);

}  // namespace rdmm::kernels
