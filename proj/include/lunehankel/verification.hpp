// SPDX-License-Identifier: Apache-2.0
//
// The full verification suite: sharp bounds, proof endpoints, the Y closed
// form against its oracle, coefficient maps, logarithmic coefficients,
// rotation, membership controls and extremal series values.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lunehankel/bound_engine.hpp"

namespace lunehankel {

struct VerificationConfig {
  int order = kDefaultOrder;
  std::size_t oracle_samples = 10000;
  /// Minimum hits per Y branch among the oracle samples.
  std::size_t branch_min_hits = 50;
  int oracle_radial = 128;
  int oracle_angular = 512;
  double oracle_tol = 1e-4;
  std::size_t coeff_samples = 1000;
  std::size_t rotation_samples = 100;
  std::size_t endpoint_samples = 100;
  SearchConfig search;
  std::vector<double> membership_radii{0.5, 0.8, 0.9};
  int membership_samples = 720;
  double membership_tol = 1e-3;
  std::uint64_t seed = 20240611;
};

struct CheckRecord {
  std::string id;
  /// The statement the check certifies.
  std::string anchor;
  double expected;
  double observed;
  double tolerance;
  bool pass;
  /// Group in the acceptance listing, 1..9.
  int criterion;
  std::optional<std::string> note;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  bool pass;
  VerificationConfig config;
  /// Branch counts for the oracle samples and for (A, B, C) generated by each class.
  std::array<std::size_t, kYBranchCount> oracle_branch_hits{};
  std::array<std::size_t, kYBranchCount> starlike_branch_hits{};
  std::array<std::size_t, kYBranchCount> convex_branch_hits{};
  std::optional<SearchReport> starlike_search;
  std::optional<SearchReport> convex_search;
  /// Wall-clock seconds per criterion and in total. Kept apart from the numeric
  /// fields, which are identical across runs with the same config.
  std::map<int, double> criterion_seconds;
  double runtime_seconds = 0.0;
};

/// Called after each criterion finishes, with its number.
using ProgressFn = std::function<void(int criterion)>;

VerificationReport run_verification(const VerificationConfig& config = {},
                                    const ProgressFn& progress = {});

/// Draws (A, B, C) in [-5, 5]^3: branch_min_hits per branch by rejection,
/// then uniform samples up to the total.
std::vector<YArgs> stratified_y_samples(std::size_t total, std::size_t per_branch,
                                        std::uint64_t seed);

}  // namespace lunehankel
