// SPDX-License-Identifier: Apache-2.0
//
// Closed-form maximum Y(A, B, C) = max_{|z| <= 1} |A + Bz + Cz^2| + 1 - |z|^2
// with a brute-force disk oracle, the class-specific reductions of H21 to Y,
// the resulting bound curves in tau1, and a global grid search for the
// supremum of |H21| over the parameter domain.
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "lunehankel/caratheodory.hpp"
#include "lunehankel/kernels.hpp"
#include "lunehankel/lune.hpp"

namespace lunehankel {

struct YArgs {
  double A;
  double B;
  double C;
};

/// Closed-form branches in evaluation order. Ties at a branch seam resolve to
/// the earlier branch.
enum class YBranch { CaseIFirst, CaseISecond, CaseIIFirst, CaseIISecond, RFirst, RSecond, RThird };
inline constexpr std::size_t kYBranchCount = 7;
inline constexpr std::array<YBranch, kYBranchCount> kAllYBranches{
    YBranch::CaseIFirst,   YBranch::CaseISecond, YBranch::CaseIIFirst, YBranch::CaseIISecond,
    YBranch::RFirst,       YBranch::RSecond,     YBranch::RThird};

std::string_view to_string(YBranch b);

struct YResult {
  double value;
  YBranch branch;
};

/// Throws InvalidInput for non-finite arguments.
YResult y_closed(const YArgs& args);

/// Uniform polar grid r_i = i/R (i = 0..R), theta_j = 2 pi j / M over the
/// closed unit disk; the centre appears once.
class PolarGrid {
 public:
  PolarGrid(int radial_steps, int angular_steps);

  int radial_steps() const { return radial_; }
  int angular_steps() const { return angular_; }
  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }
  double radius(std::size_t i) const { return r_[i]; }
  double angle(std::size_t i) const { return th_[i]; }

 private:
  int radial_;
  int angular_;
  std::vector<double> xs_, ys_, r_, th_;
};

struct DiskMax {
  double value;
  double radius;
  double angle;
};

/// Maximizes q over the grid, then refines once on a 21 x 21 polar patch with
/// a tenth of the grid spacing around the best grid point.
DiskMax maximize_on_disk(const kernels::QuadModulus& q, const PolarGrid& grid);

/// Brute-force Y on a radial_steps x angular_steps polar grid (both >= 64).
double y_oracle(const YArgs& args, int radial_steps, int angular_steps);
double y_oracle(const YArgs& args, const PolarGrid& grid);

/// (A, B, C) such that the triangle-inequality bound for interior tau1 reads
/// prefactor * (|A + B tau2 + C tau2^2| + 1 - |tau2|^2). Requires 0 < tau1 < 1.
YArgs abc_for_class(double tau1, ClassId cls);
/// tau1 (1 - tau1^2)/12 (starlike) or tau1 (1 - tau1^2)/96 (convex).
double bound_prefactor(double tau1, ClassId cls);

/// (12 - 4t^2 - 5t^4)/192 (starlike) or (16 + 4t^2 - 17t^4)/2304 (convex), t in [0, 1].
double bound_curve(double tau1, ClassId cls);

struct CurveMax {
  double value;
  double tau1;
};

/// Exact maximum of bound_curve over [lo, hi] within [0, 1].
CurveMax bound_curve_max(ClassId cls, double lo = 0.0, double hi = 1.0);

/// Sharp bound for the class: 1/16 or 23/3264.
double class_bound(ClassId cls);

/// For fixed tau1, max over |tau3| <= 1 of |H21(tau1, tau2, tau3)| equals
/// |a + b tau2 + c tau2^2| + d (1 - |tau2|^2) with these coefficients.
kernels::QuadModulus tau_objective(double tau1, ClassId cls);

/// The unimodular tau3 attaining that maximum at (tau1, tau2).
Complex aligned_tau3(double tau1, Complex tau2, ClassId cls);

struct SearchConfig {
  int tau1_steps = 64;
  int tau2_radial = 64;
  int tau2_angular = 256;
  int refine_depth = 4;
  /// Restricts tau1 to [tau1_lo, tau1_hi]; equal values pin tau1.
  double tau1_lo = 0.0;
  double tau1_hi = 1.0;
};

struct GridStats {
  int tau1_steps;
  int tau2_radial;
  int tau2_angular;
  int refine_depth;
  std::size_t evaluations;
  /// Best value after the coarse grid (entry 0) and after each refinement round.
  std::vector<double> sup_by_depth;
};

struct SearchReport {
  ClassId class_tag;
  double sup_found;
  CaratheodoryPoint argmax;
  /// h21_from_tau at argmax; its modulus reproduces sup_found.
  Complex value_at_argmax;
  double theoretical_bound;
  double gap;
  bool bound_respected;
  GridStats grid_stats;
  std::string branch_trace;
};

/// Tolerance on sup_found <= theoretical_bound.
inline constexpr double kBoundSlack = 1e-9;

/// Maximizes |h21_from_tau| over tau1 in [lo, hi] and tau2 in the closed
/// disk, with tau3 eliminated through aligned_tau3.
SearchReport global_search(ClassId cls, const SearchConfig& config = {});

}  // namespace lunehankel
