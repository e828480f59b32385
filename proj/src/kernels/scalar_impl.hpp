// SPDX-License-Identifier: Apache-2.0
//
// Scalar bodies shared by the reference kernels and the vector kernels' tails.
// Keep the operation order in sync with kernels_avx2.cpp.
#pragma once

#include <cmath>
#include <cstddef>

#include "lunehankel/kernels.hpp"

namespace lunehankel::kernels::detail {

inline void horner_point(const double* coeffs, std::size_t ncoeffs, double x, double y,
                         double& out_re, double& out_im) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = ncoeffs; k-- > 0;) {
    const double t_re = re * x - im * y;
    const double t_im = re * y + im * x;
    re = t_re + coeffs[2 * k];
    im = t_im + coeffs[2 * k + 1];
  }
  out_re = re;
  out_im = im;
}

inline double quad_modulus_point(const QuadModulus& q, double x, double y) {
  const double xx = x * x;
  const double yy = y * y;
  const double xy = x * y;
  const double re = q.a + q.b * x + q.c * (xx - yy);
  const double im = q.b * y + q.c * (xy + xy);
  return std::sqrt(re * re + im * im) + q.d * (1.0 - (xx + yy));
}

}  // namespace lunehankel::kernels::detail
