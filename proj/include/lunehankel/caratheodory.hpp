// SPDX-License-Identifier: Apache-2.0
//
// Caratheodory functions p(z) = 1 + c1 z + c2 z^2 + ... with Re p > 0 on the
// unit disk: the (tau1, tau2, tau3) parameterization of c1..c3, rational
// reconstruction on the boundary strata, and sampled positivity checks.
#pragma once

#include <vector>

#include "lunehankel/series.hpp"

namespace lunehankel {

/// Tolerance used to decide |tau| = 1.
inline constexpr double kBoundaryTol = 1e-12;

/// (tau1, tau2, tau3) with tau1 in [0, 1] (rotation normalized so c1 >= 0)
/// and tau2, tau3 in the closed unit disk.
class CaratheodoryPoint {
 public:
  /// Throws InvalidInput outside the domain. Moduli within kBoundaryTol of 1
  /// are snapped onto the unit circle.
  CaratheodoryPoint(double tau1, Complex tau2, Complex tau3 = {});

  double tau1() const { return tau1_; }
  Complex tau2() const { return tau2_; }
  Complex tau3() const { return tau3_; }

 private:
  double tau1_;
  Complex tau2_;
  Complex tau3_;
};

struct CaratheodoryCoeffs {
  Complex c1;
  Complex c2;
  Complex c3;
};

CaratheodoryCoeffs coeffs_from_params(const CaratheodoryPoint& t);

/// Which boundary stratum a point lies on; Interior has no unique p.
enum class Stratum { Tau1Unimodular, Tau2Unimodular, Tau3Unimodular, Interior };

Stratum classify(const CaratheodoryPoint& t);

/// The unique p realizing a boundary point, expanded to `order`.
/// Throws UnsupportedConfiguration for interior points.
TruncatedSeries reconstruct_p(const CaratheodoryPoint& t, int order = kDefaultOrder);

/// w = (p - 1)/(p + 1); requires p(0) = 1.
TruncatedSeries schwarz_from_p(const TruncatedSeries& p);

struct SamplePoint {
  double radius;
  double angle;
};

struct PositivityReport {
  bool passed;
  double min_real_part;
  SamplePoint where;
  std::size_t samples;
};

/// Samples Re p on circles of the given radii; passes iff Re p > -tol everywhere.
PositivityReport is_caratheodory(const TruncatedSeries& p, const std::vector<double>& radii,
                                 int samples_per_circle, double tol);

/// Samples |w| on circles of the given radii; returns the largest modulus seen.
double max_modulus_on_circles(const TruncatedSeries& w, const std::vector<double>& radii,
                              int samples_per_circle);

}  // namespace lunehankel
