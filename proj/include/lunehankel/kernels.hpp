// SPDX-License-Identifier: Apache-2.0
//
// Data-parallel inner loops. Every kernel has a scalar reference version and,
// on x86-64 hosts with AVX2, a vector version picked at runtime. Both variants
// perform the same floating-point operations in the same order, so their
// results are bitwise identical; tests/test_kernels.cpp holds them to that.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace lunehankel::kernels {

/// Objective |a + b z + c z^2| + d (1 - |z|^2) with real a, b, c, d. With d = 1
/// this is the function whose disk maximum is Y(A, B, C); the tau-space search uses
/// the same shape with a class-dependent d.
struct QuadModulus {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;
};

/// Maximum of a sampled objective and the first index attaining it.
struct ArgMax {
  double value;
  std::size_t index;
};

struct KernelTable {
  std::string_view name;
  /// Evaluates sum_k coeffs[k] z^k at z_i = xs[i] + i ys[i]. `coeffs` holds
  /// ncoeffs complex numbers interleaved as (re, im).
  void (*horner)(const double* coeffs, std::size_t ncoeffs, const double* xs, const double* ys,
                 std::size_t n, double* out_re, double* out_im);
  /// Maximum of the objective over points z_i; n must be positive.
  ArgMax (*quad_modulus_argmax)(const QuadModulus& q, const double* xs, const double* ys,
                                std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr unless built with AVX2 support and the running CPU has it.
const KernelTable* avx2_kernels();
/// Selected once per process: AVX2 when available, unless the environment
/// variable LUNEHANKEL_SIMD is set to "scalar".
const KernelTable& active_kernels();

double quad_modulus(const QuadModulus& q, double x, double y);

void horner_batch(std::span<const std::complex<double>> coeffs, std::span<const double> xs,
                  std::span<const double> ys, std::span<double> out_re, std::span<double> out_im,
                  const KernelTable& table = active_kernels());

ArgMax quad_modulus_argmax(const QuadModulus& q, std::span<const double> xs,
                           std::span<const double> ys, const KernelTable& table = active_kernels());

}  // namespace lunehankel::kernels
