// SPDX-License-Identifier: Apache-2.0
#include "lunehankel/bound_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lunehankel/errors.hpp"
#include "lunehankel/log_hankel.hpp"
#include "lunehankel/parallel.hpp"

namespace lunehankel {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kPatchHalf = 10;  // patch is (2 * kPatchHalf + 1)^2 points

struct PatchBest {
  double value;
  double radius;
  double angle;
};

// Best point on a polar patch centred at (r0, th0) with half-widths (hr, hth);
// radii outside [0, 1] are clamped.
PatchBest search_patch(const kernels::QuadModulus& q, double r0, double th0, double hr,
                       double hth) {
  constexpr int n = 2 * kPatchHalf + 1;
  thread_local std::vector<double> xs, ys, rs, ths;
  xs.clear();
  ys.clear();
  rs.clear();
  ths.clear();
  for (int i = 0; i < n; ++i) {
    const double r = std::clamp(r0 + hr * (i - kPatchHalf) / kPatchHalf, 0.0, 1.0);
    for (int j = 0; j < n; ++j) {
      const double th = th0 + hth * (j - kPatchHalf) / kPatchHalf;
      xs.push_back(r * std::cos(th));
      ys.push_back(r * std::sin(th));
      rs.push_back(r);
      ths.push_back(th);
    }
  }
  const auto best = kernels::quad_modulus_argmax(q, xs, ys);
  return {best.value, rs[best.index], ths[best.index]};
}

const PolarGrid& cached_grid(int radial, int angular) {
  thread_local std::unique_ptr<PolarGrid> grid;
  if (!grid || grid->radial_steps() != radial || grid->angular_steps() != angular) {
    grid = std::make_unique<PolarGrid>(radial, angular);
  }
  return *grid;
}

}  // namespace

std::string_view to_string(YBranch b) {
  switch (b) {
    case YBranch::CaseIFirst:
      return "case-i-first";
    case YBranch::CaseISecond:
      return "case-i-second";
    case YBranch::CaseIIFirst:
      return "case-ii-first";
    case YBranch::CaseIISecond:
      return "case-ii-second";
    case YBranch::RFirst:
      return "R-first";
    case YBranch::RSecond:
      return "R-second";
    case YBranch::RThird:
      return "R-third";
  }
  return "unknown";
}

YResult y_closed(const YArgs& args) {
  const double A = args.A;
  const double B = args.B;
  const double C = args.C;
  if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C)) {
    throw InvalidInput("y_closed: A, B, C must be finite");
  }
  const double a = std::abs(A);
  const double b = std::abs(B);
  const double c = std::abs(C);
  const double b2 = B * B;

  if (A * C >= 0.0) {
    if (b >= 2.0 * (1.0 - c)) return {a + b + c, YBranch::CaseIFirst};
    return {1.0 + a + b2 / (4.0 * (1.0 - c)), YBranch::CaseISecond};
  }

  // AC < 0, so C != 0.
  const double t = -4.0 * A * C * (1.0 / (C * C) - 1.0);
  if (t <= b2 && b < 2.0 * (1.0 - c)) {
    return {1.0 - a + b2 / (4.0 * (1.0 - c)), YBranch::CaseIIFirst};
  }
  if (b2 < std::min(4.0 * (1.0 + c) * (1.0 + c), t)) {
    return {1.0 + a + b2 / (4.0 * (1.0 + c)), YBranch::CaseIISecond};
  }
  if (c * (b + 4.0 * a) <= std::abs(A * B)) return {a + b - c, YBranch::RFirst};
  if (std::abs(A * B) <= c * (b - 4.0 * a)) return {-a + b + c, YBranch::RSecond};
  return {(c + a) * std::sqrt(1.0 - b2 / (4.0 * A * C)), YBranch::RThird};
}

PolarGrid::PolarGrid(int radial_steps, int angular_steps)
    : radial_(radial_steps), angular_(angular_steps) {
  if (radial_steps < 1 || angular_steps < 1) {
    throw InvalidInput("PolarGrid: step counts must be positive");
  }
  const auto n = static_cast<std::size_t>(radial_steps) * angular_steps + 1;
  xs_.reserve(n);
  ys_.reserve(n);
  r_.reserve(n);
  th_.reserve(n);
  xs_.push_back(0.0);
  ys_.push_back(0.0);
  r_.push_back(0.0);
  th_.push_back(0.0);
  for (int j = 0; j < angular_steps; ++j) {
    const double th = kTwoPi * j / angular_steps;
    const double cs = std::cos(th);
    const double sn = std::sin(th);
    for (int i = 1; i <= radial_steps; ++i) {
      const double r = static_cast<double>(i) / radial_steps;
      xs_.push_back(r * cs);
      ys_.push_back(r * sn);
      r_.push_back(r);
      th_.push_back(th);
    }
  }
}

DiskMax maximize_on_disk(const kernels::QuadModulus& q, const PolarGrid& grid) {
  const auto coarse = kernels::quad_modulus_argmax(q, grid.xs(), grid.ys());
  const double r0 = grid.radius(coarse.index);
  const double th0 = grid.angle(coarse.index);
  const double hr = 1.0 / grid.radial_steps();
  // At the centre every direction is a neighbour.
  const double hth = r0 == 0.0 ? std::numbers::pi : kTwoPi / grid.angular_steps();
  const PatchBest fine = search_patch(q, r0, th0, hr, hth);
  if (fine.value > coarse.value) return {fine.value, fine.radius, fine.angle};
  return {coarse.value, r0, th0};
}

double y_oracle(const YArgs& args, const PolarGrid& grid) {
  return maximize_on_disk({args.A, args.B, args.C, 1.0}, grid).value;
}

double y_oracle(const YArgs& args, int radial_steps, int angular_steps) {
  if (radial_steps < 64 || angular_steps < 64) {
    throw InvalidInput("y_oracle: grid steps must be >= 64");
  }
  return y_oracle(args, cached_grid(radial_steps, angular_steps));
}

YArgs abc_for_class(double tau1, ClassId cls) {
  if (!(tau1 > 0.0 && tau1 < 1.0)) throw InvalidInput("abc_for_class: tau1 must lie in (0, 1)");
  const double t2 = tau1 * tau1;
  const double s = 1.0 - t2;
  if (cls == ClassId::LuneStarlike) {
    return {-3.0 * t2 * tau1 / (16.0 * s), tau1 / 4.0, -(3.0 + t2) / (4.0 * tau1)};
  }
  return {-t2 * tau1 / (8.0 * s), tau1 / 2.0, -(2.0 + t2) / (3.0 * tau1)};
}

double bound_prefactor(double tau1, ClassId cls) {
  return tau1 * (1.0 - tau1 * tau1) / (cls == ClassId::LuneStarlike ? 12.0 : 96.0);
}

double bound_curve(double tau1, ClassId cls) {
  if (!(tau1 >= 0.0 && tau1 <= 1.0)) throw InvalidInput("bound_curve: tau1 must lie in [0, 1]");
  const double t2 = tau1 * tau1;
  if (cls == ClassId::LuneStarlike) return (12.0 - 4.0 * t2 - 5.0 * t2 * t2) / 192.0;
  return (16.0 + 4.0 * t2 - 17.0 * t2 * t2) / 2304.0;
}

CurveMax bound_curve_max(ClassId cls, double lo, double hi) {
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
    throw InvalidInput("bound_curve_max: need 0 <= lo <= hi <= 1");
  }
  // Both curves are quadratics in t^2; the only interior stationary point is
  // the convex one at t^2 = 2/17.
  std::vector<double> candidates{lo, hi};
  if (cls == ClassId::LuneConvex) {
    const double t = std::sqrt(2.0 / 17.0);
    if (lo < t && t < hi) candidates.push_back(t);
  }
  CurveMax best{-1.0, lo};
  for (double t : candidates) {
    const double v = bound_curve(t, cls);
    if (v > best.value) best = {v, t};
  }
  return best;
}

double class_bound(ClassId cls) {
  return cls == ClassId::LuneStarlike ? 1.0 / 16.0 : 23.0 / 3264.0;
}

kernels::QuadModulus tau_objective(double tau1, ClassId cls) {
  const double t2 = tau1 * tau1;
  const double s = 1.0 - t2;
  if (cls == ClassId::LuneStarlike) {
    return {-3.0 * t2 * t2 / 192.0, 4.0 * s * t2 / 192.0, -4.0 * s * (3.0 + t2) / 192.0,
            16.0 * tau1 * s / 192.0};
  }
  return {-3.0 * t2 * t2 / 2304.0, 12.0 * s * t2 / 2304.0, -8.0 * s * (2.0 + t2) / 2304.0,
          24.0 * tau1 * s / 2304.0};
}

Complex aligned_tau3(double tau1, Complex tau2, ClassId cls) {
  const auto q = tau_objective(tau1, cls);
  const Complex rest = q.a + q.b * tau2 + q.c * tau2 * tau2;
  const double m = std::abs(rest);
  return m > 0.0 ? rest / m : Complex{1.0};
}

SearchReport global_search(ClassId cls, const SearchConfig& cfg) {
  if (cfg.tau1_steps < 8 || cfg.tau2_radial < 32 || cfg.tau2_angular < 32 ||
      cfg.refine_depth < 0) {
    throw InvalidInput(
        "global_search: need tau1_steps >= 8, tau2 steps >= 32, refine_depth >= 0");
  }
  if (!(0.0 <= cfg.tau1_lo && cfg.tau1_lo <= cfg.tau1_hi && cfg.tau1_hi <= 1.0)) {
    throw InvalidInput("global_search: need 0 <= tau1_lo <= tau1_hi <= 1");
  }

  const PolarGrid grid(cfg.tau2_radial, cfg.tau2_angular);
  const bool pinned = cfg.tau1_lo == cfg.tau1_hi;
  const int n_tau1 = pinned ? 1 : cfg.tau1_steps + 1;
  const double tau1_step = pinned ? 0.0 : (cfg.tau1_hi - cfg.tau1_lo) / cfg.tau1_steps;

  struct Row {
    double value;
    std::size_t index;
  };
  std::vector<Row> rows(static_cast<std::size_t>(n_tau1));
  parallel_for(rows.size(), [&](std::size_t k) {
    const double t1 = pinned ? cfg.tau1_lo : cfg.tau1_lo + tau1_step * static_cast<double>(k);
    const auto best = kernels::quad_modulus_argmax(tau_objective(t1, cls), grid.xs(), grid.ys());
    rows[k] = {best.value, best.index};
  });

  // Order-independent reduction: maximum value, lowest index on ties.
  std::size_t best_row = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k].value > rows[best_row].value) best_row = k;
  }
  double best_value = rows[best_row].value;
  double best_t1 =
      pinned ? cfg.tau1_lo : cfg.tau1_lo + tau1_step * static_cast<double>(best_row);
  double best_r = grid.radius(rows[best_row].index);
  double best_th = grid.angle(rows[best_row].index);

  GridStats stats{cfg.tau1_steps, cfg.tau2_radial, cfg.tau2_angular, cfg.refine_depth,
                  rows.size() * grid.xs().size(), {best_value}};

  double h_t1 = tau1_step;
  double h_r = 1.0 / cfg.tau2_radial;
  double h_th = kTwoPi / cfg.tau2_angular;
  constexpr int n_local = 2 * kPatchHalf + 1;
  for (int depth = 1; depth <= cfg.refine_depth; ++depth) {
    std::vector<PatchBest> local(n_local);
    std::vector<double> local_t1(n_local);
    for (int i = 0; i < n_local; ++i) {
      local_t1[i] = std::clamp(best_t1 + h_t1 * (i - kPatchHalf) / kPatchHalf, cfg.tau1_lo,
                               cfg.tau1_hi);
    }
    const double th_half = best_r == 0.0 ? std::numbers::pi : h_th;
    parallel_for(local.size(), [&](std::size_t i) {
      local[i] = search_patch(tau_objective(local_t1[i], cls), best_r, best_th, h_r, th_half);
    });
    for (int i = 0; i < n_local; ++i) {
      if (local[i].value > best_value) {
        best_value = local[i].value;
        best_t1 = local_t1[i];
        best_r = local[i].radius;
        best_th = local[i].angle;
      }
    }
    stats.evaluations += static_cast<std::size_t>(n_local) * n_local * n_local;
    stats.sup_by_depth.push_back(best_value);
    h_t1 /= kPatchHalf;
    h_r /= kPatchHalf;
    h_th /= kPatchHalf;
  }

  const Complex tau2 = std::polar(best_r, best_th);
  const CaratheodoryPoint argmax(best_t1, tau2, aligned_tau3(best_t1, tau2, cls));
  const CurveMax bound = bound_curve_max(cls, cfg.tau1_lo, cfg.tau1_hi);

  std::string trace;
  if (argmax.tau1() == 0.0) {
    trace = "endpoint tau1=0 (tau2-only case)";
  } else if (argmax.tau1() == 1.0) {
    trace = "endpoint tau1=1 (tau1-only case)";
  } else {
    trace = std::string(to_string(y_closed(abc_for_class(argmax.tau1(), cls)).branch));
  }

  return SearchReport{cls,
                      best_value,
                      argmax,
                      h21_from_tau(argmax, cls).value,
                      bound.value,
                      bound.value - best_value,
                      best_value <= bound.value + kBoundSlack,
                      std::move(stats),
                      std::move(trace)};
}

}  // namespace lunehankel
