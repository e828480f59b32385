// SPDX-License-Identifier: Apache-2.0
#include "scalar_impl.hpp"

namespace lunehankel::kernels {
namespace {

void horner_scalar(const double* coeffs, std::size_t ncoeffs, const double* xs, const double* ys,
                   std::size_t n, double* out_re, double* out_im) {
  for (std::size_t i = 0; i < n; ++i) {
    detail::horner_point(coeffs, ncoeffs, xs[i], ys[i], out_re[i], out_im[i]);
  }
}

ArgMax quad_modulus_argmax_scalar(const QuadModulus& q, const double* xs, const double* ys,
                                  std::size_t n) {
  ArgMax best{detail::quad_modulus_point(q, xs[0], ys[0]), 0};
  for (std::size_t i = 1; i < n; ++i) {
    const double v = detail::quad_modulus_point(q, xs[i], ys[i]);
    if (v > best.value) best = {v, i};
  }
  return best;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &horner_scalar, &quad_modulus_argmax_scalar};
  return table;
}

}  // namespace lunehankel::kernels
