// SPDX-License-Identifier: Apache-2.0
//
// Logarithmic coefficients gamma_n, defined by log(f(z)/z) = 2 sum gamma_n z^n,
// and the second Hankel determinant H21 = gamma1 gamma3 - gamma2^2 evaluated
// from Taylor coefficients, Caratheodory coefficients, or tau parameters.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lunehankel/caratheodory.hpp"
#include "lunehankel/lune.hpp"
#include "lunehankel/series.hpp"

namespace lunehankel {

struct LogCoeffs {
  /// gamma[n - 1] is gamma_n; holds between three and five entries.
  std::vector<Complex> gamma;

  Complex operator()(int n) const;
  int count() const { return static_cast<int>(gamma.size()); }
  /// {0, gamma_1, gamma_2, ...}: index equals subscript, for hankel_generic.
  std::vector<Complex> sequence() const;
};

enum class Coordinates { Taylor, CaratheodoryC, TauParams };

struct HankelValue {
  Complex value;
  std::optional<ClassId> class_tag;
  Coordinates coordinates;
  /// (a2^4 - 12 a3^2 + 12 a2 a4)/48 when a Taylor prefix was supplied.
  std::optional<Complex> taylor_form;

  double modulus() const { return std::abs(value); }
};

/// gamma_1..gamma_5 from the series log(f/z); needs order >= 6.
LogCoeffs log_coeffs_series(const TruncatedSeries& f);

/// gamma_1..gamma_5 from the closed polynomial forms in a2..a6. gamma_4 needs
/// a5 and gamma_5 needs a5, a6; missing ones are left out.
LogCoeffs log_coeffs_closed(const TaylorPrefix& a);

HankelValue h21_log(const LogCoeffs& g);
HankelValue h21_log(const LogCoeffs& g, const TaylorPrefix& a);
Complex h21_taylor(const TaylorPrefix& a);

/// Class-specific quartic in c1, c2, c3.
HankelValue h21_from_c(const CaratheodoryCoeffs& c, ClassId cls);
/// Class-specific polynomial in tau1, tau2, tau3.
HankelValue h21_from_tau(const CaratheodoryPoint& t, ClassId cls);

/// det[ seq[n + i + j] ]_{i,j < q}.
Complex hankel_generic(std::span<const Complex> seq, int q, int n);

/// e^{-i theta} f(e^{i theta} z): a_n -> e^{i (n-1) theta} a_n.
TruncatedSeries rotate(const TruncatedSeries& f, double theta);

}  // namespace lunehankel
