// SPDX-License-Identifier: Apache-2.0
#include "lunehankel/lune.hpp"

#include <cmath>
#include <limits>

#include "lunehankel/errors.hpp"
#include "sampling.hpp"

namespace lunehankel {
namespace {

void require_normalized(const TruncatedSeries& f, const char* who) {
  constexpr double kTol = 1e-12;
  if (std::abs(f[0]) > kTol || std::abs(f[1] - 1.0) > kTol) {
    throw InvalidInput(std::string(who) + ": expected f(0) = 0 and f'(0) = 1");
  }
}

// (x^2 + sqrt(1 + x^4) - 1)/x integrated from 0, the exponent shared by g and h0.
TruncatedSeries lune_exponent(int order) {
  const TruncatedSeries one = TruncatedSeries::constant(1.0, order);
  const TruncatedSeries z4 = TruncatedSeries::monomial(4, 1.0, order);
  const TruncatedSeries integrand =
      TruncatedSeries::monomial(2, 1.0, order) + sqrt_series(one + z4) - one;
  return integrate_quotient(integrand);
}

// Multiplies by z, keeping the order.
TruncatedSeries times_z(const TruncatedSeries& a) {
  std::vector<Complex> c(static_cast<std::size_t>(a.order()) + 1);
  for (int k = 1; k <= a.order(); ++k) c[k] = a[k - 1];
  return TruncatedSeries(std::move(c));
}

}  // namespace

std::string_view to_string(ClassId c) {
  return c == ClassId::LuneStarlike ? "starlike" : "convex";
}

std::optional<ClassId> parse_class(std::string_view name) {
  if (name == "starlike") return ClassId::LuneStarlike;
  if (name == "convex") return ClassId::LuneConvex;
  return std::nullopt;
}

TaylorPrefix TaylorPrefix::from_series(const TruncatedSeries& f) {
  if (f.order() < 4) throw InvalidInput("TaylorPrefix: series order must be >= 4");
  require_normalized(f, "TaylorPrefix");
  TaylorPrefix p{f[2], f[3], f[4], std::nullopt, std::nullopt};
  if (f.order() >= 5) p.a5 = f[5];
  if (f.order() >= 6) p.a6 = f[6];
  return p;
}

TruncatedSeries q_series(int order) {
  const TruncatedSeries one = TruncatedSeries::constant(1.0, order);
  return TruncatedSeries::variable(order) +
         sqrt_series(one + TruncatedSeries::monomial(2, 1.0, order));
}

TaylorPrefix starlike_coeffs_from_c(const CaratheodoryCoeffs& c) {
  const Complex c1 = c.c1;
  return {c1 / 2.0, c1 * c1 / 16.0 + c.c2 / 4.0,
          c1 * c.c2 / 24.0 + c.c3 / 6.0 - c1 * c1 * c1 / 96.0, std::nullopt, std::nullopt};
}

TaylorPrefix convex_coeffs_from_c(const CaratheodoryCoeffs& c) {
  const Complex c1 = c.c1;
  return {c1 / 4.0, c1 * c1 / 48.0 + c.c2 / 12.0,
          c1 * c.c2 / 96.0 + c.c3 / 24.0 - c1 * c1 * c1 / 384.0, std::nullopt, std::nullopt};
}

TaylorPrefix coeffs_from_c(const CaratheodoryCoeffs& c, ClassId cls) {
  return cls == ClassId::LuneStarlike ? starlike_coeffs_from_c(c) : convex_coeffs_from_c(c);
}

TruncatedSeries f_from_schwarz(const TruncatedSeries& w, ClassId cls, int order) {
  if (w[0] != Complex{}) throw InvalidInput("f_from_schwarz: w(0) must be 0");
  const int n = std::min(order, w.order());
  if (n < 2) throw InvalidInput("f_from_schwarz: order must be >= 2");
  const TruncatedSeries qw = compose(q_series(n), w.truncated(n));

  std::vector<Complex> a(static_cast<std::size_t>(n) + 1);
  if (cls == ClassId::LuneStarlike) {
    // z f' = f * q(w):  (k - 1) a_k = sum_{j=1}^{k-1} Q_j a_{k-j}
    a[1] = 1.0;
    for (int k = 2; k <= n; ++k) {
      Complex acc{};
      for (int j = 1; j < k; ++j) acc += qw[j] * a[k - j];
      a[k] = acc / static_cast<double>(k - 1);
    }
    return TruncatedSeries(std::move(a));
  }

  // F = f':  z F' = F * (q(w) - 1),  k F_k = sum_{j=1}^{k} Q_j F_{k-j}
  std::vector<Complex> fp(static_cast<std::size_t>(n));
  fp[0] = 1.0;
  for (int k = 1; k < n; ++k) {
    Complex acc{};
    for (int j = 1; j <= k; ++j) acc += qw[j] * fp[k - j];
    fp[k] = acc / static_cast<double>(k);
  }
  for (int k = 1; k <= n; ++k) a[k] = fp[k - 1] / static_cast<double>(k);
  return TruncatedSeries(std::move(a));
}

TruncatedSeries class_ratio(const TruncatedSeries& f, ClassId cls) {
  require_normalized(f, "class_ratio");
  if (cls == ClassId::LuneStarlike) {
    return divide_by_z(euler_derivative(f)) / divide_by_z(f);
  }
  const TruncatedSeries fp = derivative(f);
  return TruncatedSeries::constant(1.0, fp.order()) + euler_derivative(fp) / fp;
}

MembershipReport membership_check(const TruncatedSeries& f, ClassId cls,
                                  const std::vector<double>& radii, int samples_per_circle,
                                  double tol) {
  if (radii.empty() || samples_per_circle < 1) {
    throw InvalidInput("membership_check: need at least one radius and one sample");
  }
  for (double r : radii) {
    if (!(r > 0.0 && r <= kMaxMembershipRadius)) {
      throw InvalidInput("membership_check: radii must lie in (0, 0.9]");
    }
  }
  const TruncatedSeries v = class_ratio(f, cls);
  const detail::CircleGrid grid(radii, samples_per_circle);
  std::vector<double> re(grid.xs.size());
  std::vector<double> im(grid.xs.size());
  evaluate_batch(v, grid.xs, grid.ys, re, im);

  MembershipReport rep{};
  rep.worst_margin = std::numeric_limits<double>::infinity();
  rep.samples = re.size();
  rep.tol = tol;
  for (std::size_t i = 0; i < re.size(); ++i) {
    const Complex val{re[i], im[i]};
    const double margin = 2.0 * std::abs(val) - std::abs(val * val - 1.0);
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.where = {grid.radius[i], grid.angle[i]};
    }
  }
  rep.passed = rep.worst_margin >= -tol;

  rep.coeff_bound = max_coefficient_modulus(v);
  if (tail_bound(rep.coeff_bound, kMaxMembershipRadius, v.order()) <= tol) {
    rep.confidence_radius = kMaxMembershipRadius;
  } else {
    double lo = 0.0;
    double hi = kMaxMembershipRadius;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (tail_bound(rep.coeff_bound, mid, v.order()) <= tol ? lo : hi) = mid;
    }
    rep.confidence_radius = lo;
  }
  return rep;
}

TruncatedSeries extremal_g(int order) {
  if (order < 5) throw InvalidInput("extremal_g: order must be >= 5");
  return times_z(exp_series(lune_exponent(order)));
}

ConvexExtremal extremal_h(int order) {
  if (order < 5) throw InvalidInput("extremal_h: order must be >= 5");
  const double k = std::sqrt(69.0 / 68.0);
  const TruncatedSeries h0_over_z = exp_series(Complex{k} * lune_exponent(order - 1));
  return {times_z(h0_over_z.truncated(order)), antiderivative(h0_over_z)};
}

TruncatedSeries koebe(int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) c[k] = static_cast<double>(k);
  return TruncatedSeries(std::move(c));
}

}  // namespace lunehankel
