// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <string_view>

#include "lunehankel/errors.hpp"
#include "scalar_impl.hpp"

namespace lunehankel::kernels {

#if defined(LUNEHANKEL_HAVE_AVX2)
namespace detail {
const KernelTable& avx2_table();
}
#endif

const KernelTable* avx2_kernels() {
#if defined(LUNEHANKEL_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = [&]() -> const KernelTable& {
    const char* forced = std::getenv("LUNEHANKEL_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
    if (const KernelTable* v = avx2_kernels()) return *v;
    return scalar_kernels();
  }();
  return table;
}

double quad_modulus(const QuadModulus& q, double x, double y) {
  return detail::quad_modulus_point(q, x, y);
}

void horner_batch(std::span<const std::complex<double>> coeffs, std::span<const double> xs,
                  std::span<const double> ys, std::span<double> out_re, std::span<double> out_im,
                  const KernelTable& table) {
  if (ys.size() != xs.size() || out_re.size() != xs.size() || out_im.size() != xs.size()) {
    throw InvalidInput("horner_batch: mismatched span lengths");
  }
  // std::complex<double> is layout-compatible with double[2].
  table.horner(reinterpret_cast<const double*>(coeffs.data()), coeffs.size(), xs.data(), ys.data(),
               xs.size(), out_re.data(), out_im.data());
}

ArgMax quad_modulus_argmax(const QuadModulus& q, std::span<const double> xs,
                           std::span<const double> ys, const KernelTable& table) {
  if (xs.empty() || ys.size() != xs.size()) {
    throw InvalidInput("quad_modulus_argmax: need equal, nonempty point spans");
  }
  return table.quad_modulus_argmax(q, xs.data(), ys.data(), xs.size());
}

}  // namespace lunehankel::kernels
