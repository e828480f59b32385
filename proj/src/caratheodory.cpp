// SPDX-License-Identifier: Apache-2.0
#include "lunehankel/caratheodory.hpp"

#include <cmath>
#include <limits>

#include "lunehankel/errors.hpp"
#include "lunehankel/kernels.hpp"
#include "sampling.hpp"

namespace lunehankel {
namespace {

Complex snap_to_disk(Complex t, const char* name) {
  const double m = std::abs(t);
  if (!std::isfinite(m) || m > 1.0 + kBoundaryTol) {
    throw InvalidInput(std::string("CaratheodoryPoint: |") + name + "| must be <= 1");
  }
  if (m >= 1.0 - kBoundaryTol) return t / m;
  return t;
}

}  // namespace

CaratheodoryPoint::CaratheodoryPoint(double tau1, Complex tau2, Complex tau3) {
  if (!(tau1 >= 0.0 && tau1 <= 1.0 + kBoundaryTol)) {
    throw InvalidInput("CaratheodoryPoint: tau1 must lie in [0, 1]");
  }
  tau1_ = tau1 >= 1.0 - kBoundaryTol ? 1.0 : tau1;
  tau2_ = snap_to_disk(tau2, "tau2");
  tau3_ = snap_to_disk(tau3, "tau3");
}

CaratheodoryCoeffs coeffs_from_params(const CaratheodoryPoint& t) {
  const double t1 = t.tau1();
  const Complex t2 = t.tau2();
  const Complex t3 = t.tau3();
  const double s = 1.0 - t1 * t1;
  const double m2 = std::norm(t2);
  return {
      Complex{2.0 * t1},
      2.0 * t1 * t1 + 2.0 * s * t2,
      2.0 * t1 * t1 * t1 + 4.0 * s * t1 * t2 - 2.0 * s * t1 * t2 * t2 + 2.0 * s * (1.0 - m2) * t3,
  };
}

Stratum classify(const CaratheodoryPoint& t) {
  if (t.tau1() == 1.0) return Stratum::Tau1Unimodular;
  if (std::abs(t.tau2()) == 1.0) return Stratum::Tau2Unimodular;
  if (std::abs(t.tau3()) == 1.0) return Stratum::Tau3Unimodular;
  return Stratum::Interior;
}

TruncatedSeries reconstruct_p(const CaratheodoryPoint& t, int order) {
  const Complex t1 = t.tau1();
  const Complex t2 = t.tau2();
  const Complex t3 = t.tau3();
  switch (classify(t)) {
    case Stratum::Tau1Unimodular: {
      const TruncatedSeries num({1.0, t1}, order);
      const TruncatedSeries den({1.0, -t1}, order);
      return num / den;
    }
    case Stratum::Tau2Unimodular: {
      const TruncatedSeries num({1.0, std::conj(t1) * t2 + t1, t2}, order);
      const TruncatedSeries den({1.0, std::conj(t1) * t2 - t1, -t2}, order);
      return num / den;
    }
    case Stratum::Tau3Unimodular: {
      const Complex lin = std::conj(t2) * t3 + std::conj(t1) * t2;
      const Complex quad = std::conj(t1) * t3;
      const Complex cross = t1 * std::conj(t2) * t3;
      const TruncatedSeries num({1.0, lin + t1, quad + cross + t2, t3}, order);
      const TruncatedSeries den({1.0, lin - t1, quad - cross - t2, -t3}, order);
      return num / den;
    }
    case Stratum::Interior:
      break;
  }
  throw UnsupportedConfiguration(
      "reconstruct_p: no canonical function for tau1, tau2, tau3 all inside the disk");
}

TruncatedSeries schwarz_from_p(const TruncatedSeries& p) {
  if (p[0] != Complex{1.0}) throw InvalidInput("schwarz_from_p: p(0) must be 1");
  const TruncatedSeries one = TruncatedSeries::constant(1.0, p.order());
  return (p - one) / (p + one);
}

PositivityReport is_caratheodory(const TruncatedSeries& p, const std::vector<double>& radii,
                                 int samples_per_circle, double tol) {
  if (p[0] != Complex{1.0}) throw InvalidInput("is_caratheodory: p(0) must be 1");
  if (samples_per_circle < 1 || radii.empty()) {
    throw InvalidInput("is_caratheodory: need at least one radius and one sample");
  }
  const detail::CircleGrid grid(radii, samples_per_circle);
  std::vector<double> re(grid.xs.size());
  std::vector<double> im(grid.xs.size());
  evaluate_batch(p, grid.xs, grid.ys, re, im);

  PositivityReport rep{true, std::numeric_limits<double>::infinity(), {0.0, 0.0}, re.size()};
  for (std::size_t i = 0; i < re.size(); ++i) {
    if (re[i] < rep.min_real_part) {
      rep.min_real_part = re[i];
      rep.where = {grid.radius[i], grid.angle[i]};
    }
  }
  rep.passed = rep.min_real_part > -tol;
  return rep;
}

double max_modulus_on_circles(const TruncatedSeries& w, const std::vector<double>& radii,
                              int samples_per_circle) {
  const detail::CircleGrid grid(radii, samples_per_circle);
  std::vector<double> re(grid.xs.size());
  std::vector<double> im(grid.xs.size());
  evaluate_batch(w, grid.xs, grid.ys, re, im);
  double m = 0.0;
  for (std::size_t i = 0; i < re.size(); ++i) m = std::max(m, std::hypot(re[i], im[i]));
  return m;
}

}  // namespace lunehankel
