// SPDX-License-Identifier: Apache-2.0
//
// The lune target q(z) = z + sqrt(1 + z^2) and the two classes subordinate to
// it: lune-starlike (z f'/f < q) and lune-convex (1 + z f''/f' < q).
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lunehankel/caratheodory.hpp"
#include "lunehankel/series.hpp"

namespace lunehankel {

enum class ClassId { LuneStarlike, LuneConvex };

std::string_view to_string(ClassId c);
/// Accepts "starlike" and "convex".
std::optional<ClassId> parse_class(std::string_view name);

/// a2..a6 of f(z) = z + a2 z^2 + ...; a5 and a6 are present only when the
/// source series reaches that degree.
struct TaylorPrefix {
  Complex a2;
  Complex a3;
  Complex a4;
  std::optional<Complex> a5;
  std::optional<Complex> a6;

  /// Requires f(0) = 0, f'(0) = 1 and order >= 4.
  static TaylorPrefix from_series(const TruncatedSeries& f);
};

TruncatedSeries q_series(int order = kDefaultOrder);

/// a2..a4 in terms of c1..c3 for f with z f'/f = q(w), w = (p - 1)/(p + 1).
TaylorPrefix starlike_coeffs_from_c(const CaratheodoryCoeffs& c);
/// a2..a4 in terms of c1..c3 for f with 1 + z f''/f' = q(w).
TaylorPrefix convex_coeffs_from_c(const CaratheodoryCoeffs& c);
TaylorPrefix coeffs_from_c(const CaratheodoryCoeffs& c, ClassId cls);

/// Solves the class's defining equation for f given the Schwarz function w.
/// Requires w(0) = 0. The result has order min(order, w.order()).
TruncatedSeries f_from_schwarz(const TruncatedSeries& w, ClassId cls, int order = kDefaultOrder);

/// z f'/f (starlike) or 1 + z f''/f' (convex) as a series.
TruncatedSeries class_ratio(const TruncatedSeries& f, ClassId cls);

struct MembershipReport {
  bool passed;
  /// min over samples of 2|v| - |v^2 - 1|; negative means the lune was left.
  double worst_margin;
  SamplePoint where;
  std::size_t samples;
  double tol;
  /// Largest |coefficient| of the truncated ratio series, used as the tail bound constant.
  double coeff_bound;
  /// Largest radius <= 0.9 whose truncation tail bound stays below tol.
  double confidence_radius;
};

inline constexpr double kMaxMembershipRadius = 0.9;

/// Sampled check of |v^2 - 1| <= 2|v| + tol for v = class_ratio(f). Radii
/// must lie in (0, 0.9].
MembershipReport membership_check(const TruncatedSeries& f, ClassId cls,
                                  const std::vector<double>& radii, int samples_per_circle = 720,
                                  double tol = 1e-3);

/// z exp( int_0^z (x^2 + sqrt(1 + x^4) - 1)/x dx ), extremal for the starlike bound.
TruncatedSeries extremal_g(int order = kDefaultOrder);

struct ConvexExtremal {
  TruncatedSeries h0;
  TruncatedSeries h;
};

/// h0 = z exp( sqrt(69/68) int_0^z (x^2 + sqrt(1 + x^4) - 1)/x dx ) and
/// h = int_0^z h0(x)/x dx, extremal for the convex bound.
ConvexExtremal extremal_h(int order = kDefaultOrder);

/// z/(1 - z)^2.
TruncatedSeries koebe(int order = kDefaultOrder);

}  // namespace lunehankel
