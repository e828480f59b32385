// SPDX-License-Identifier: Apache-2.0
//
// AVX2 variants, four points per register. Built with -mavx2 only (no FMA) so
// each lane rounds exactly like the scalar reference.
#include <immintrin.h>

#include "scalar_impl.hpp"

namespace lunehankel::kernels {
namespace {

void horner_avx2(const double* coeffs, std::size_t ncoeffs, const double* xs, const double* ys,
                 std::size_t n, double* out_re, double* out_im) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    for (std::size_t k = ncoeffs; k-- > 0;) {
      const __m256d t_re = _mm256_sub_pd(_mm256_mul_pd(re, x), _mm256_mul_pd(im, y));
      const __m256d t_im = _mm256_add_pd(_mm256_mul_pd(re, y), _mm256_mul_pd(im, x));
      re = _mm256_add_pd(t_re, _mm256_set1_pd(coeffs[2 * k]));
      im = _mm256_add_pd(t_im, _mm256_set1_pd(coeffs[2 * k + 1]));
    }
    _mm256_storeu_pd(out_re + i, re);
    _mm256_storeu_pd(out_im + i, im);
  }
  for (; i < n; ++i) {
    detail::horner_point(coeffs, ncoeffs, xs[i], ys[i], out_re[i], out_im[i]);
  }
}

ArgMax quad_modulus_argmax_avx2(const QuadModulus& q, const double* xs, const double* ys,
                                std::size_t n) {
  const __m256d a = _mm256_set1_pd(q.a);
  const __m256d b = _mm256_set1_pd(q.b);
  const __m256d c = _mm256_set1_pd(q.c);
  const __m256d d = _mm256_set1_pd(q.d);
  const __m256d one = _mm256_set1_pd(1.0);

  __m256d best = _mm256_set1_pd(-HUGE_VAL);
  // Lane indices are carried as doubles; exact below 2^53.
  __m256d best_idx = _mm256_setzero_pd();
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d four = _mm256_set1_pd(4.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    const __m256d xx = _mm256_mul_pd(x, x);
    const __m256d yy = _mm256_mul_pd(y, y);
    const __m256d xy = _mm256_mul_pd(x, y);
    const __m256d re = _mm256_add_pd(_mm256_add_pd(a, _mm256_mul_pd(b, x)),
                                     _mm256_mul_pd(c, _mm256_sub_pd(xx, yy)));
    const __m256d im = _mm256_add_pd(_mm256_mul_pd(b, y), _mm256_mul_pd(c, _mm256_add_pd(xy, xy)));
    const __m256d mod = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im)));
    const __m256d v =
        _mm256_add_pd(mod, _mm256_mul_pd(d, _mm256_sub_pd(one, _mm256_add_pd(xx, yy))));
    const __m256d gt = _mm256_cmp_pd(v, best, _CMP_GT_OQ);
    best = _mm256_blendv_pd(best, v, gt);
    best_idx = _mm256_blendv_pd(best_idx, idx, gt);
    idx = _mm256_add_pd(idx, four);
  }

  alignas(32) double lane_val[4];
  alignas(32) double lane_idx[4];
  _mm256_store_pd(lane_val, best);
  _mm256_store_pd(lane_idx, best_idx);

  ArgMax result{-HUGE_VAL, 0};
  bool have = false;
  for (int l = 0; l < 4; ++l) {
    if (i == 0) break;
    const auto li = static_cast<std::size_t>(lane_idx[l]);
    if (!have || lane_val[l] > result.value || (lane_val[l] == result.value && li < result.index)) {
      result = {lane_val[l], li};
      have = true;
    }
  }
  for (; i < n; ++i) {
    const double v = detail::quad_modulus_point(q, xs[i], ys[i]);
    if (!have || v > result.value) {
      result = {v, i};
      have = true;
    }
  }
  return result;
}

}  // namespace

namespace detail {
const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", &horner_avx2, &quad_modulus_argmax_avx2};
  return table;
}
}  // namespace detail

}  // namespace lunehankel::kernels
