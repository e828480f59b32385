// SPDX-License-Identifier: Apache-2.0
#include <set>

#include "lunehankel/errors.hpp"
#include "lunehankel/verification.hpp"
#include "test_support.hpp"

using namespace lunehankel;

namespace {

VerificationConfig small_config() {
  VerificationConfig cfg;
  cfg.order = 32;
  cfg.oracle_samples = 400;
  cfg.oracle_radial = 64;
  cfg.oracle_angular = 256;
  cfg.coeff_samples = 60;
  cfg.rotation_samples = 20;
  cfg.search.tau1_steps = 16;
  cfg.search.tau2_radial = 32;
  cfg.search.tau2_angular = 64;
  return cfg;
}

}  // namespace

TEST_CASE("stratified samples meet every branch quota") {
  const auto samples = stratified_y_samples(500, 50, 7);
  REQUIRE(samples.size() == 500);
  std::array<std::size_t, kYBranchCount> hits{};
  for (const auto& a : samples) {
    CHECK(std::abs(a.A) <= 5.0);
    CHECK(std::abs(a.B) <= 5.0);
    CHECK(std::abs(a.C) <= 5.0);
    ++hits[static_cast<std::size_t>(y_closed(a).branch)];
  }
  for (auto h : hits) CHECK(h >= 50);
  CHECK_THROWS_AS(stratified_y_samples(100, 50, 7), InvalidInput);
}

TEST_CASE("report schema") {
  int progress = 0;
  const auto rep = run_verification(small_config(), [&](int c) { CHECK(c == ++progress); });
  CHECK(progress == 9);
  std::set<std::string> ids;
  std::set<int> criteria;
  bool all = true;
  for (const auto& c : rep.checks) {
    CHECK(!c.id.empty());
    CHECK(!c.anchor.empty());
    CHECK(ids.insert(c.id).second);
    criteria.insert(c.criterion);
    all = all && c.pass;
  }
  CHECK(criteria.size() == 9);
  CHECK(rep.pass == all);
  CHECK(rep.criterion_seconds.size() == 9);
  REQUIRE(rep.convex_search.has_value());
  CHECK(ids.count("convex.constant.23_3264_vs_23_32640") == 1);
}

TEST_CASE("reduced settings still pass and stay deterministic") {
  const auto a = run_verification(small_config());
  const auto b = run_verification(small_config());
  CHECK(a.pass);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].observed == b.checks[i].observed);
    CHECK(a.checks[i].pass == b.checks[i].pass);
  }
  CHECK(a.oracle_branch_hits == b.oracle_branch_hits);
}

TEST_CASE("low truncation order is reported through the confidence radius") {
  auto cfg = small_config();
  cfg.order = 8;
  const auto rep = run_verification(cfg);
  for (const auto& c : rep.checks) {
    if (c.id.rfind("membership.", 0) != 0) continue;
    REQUIRE(c.note.has_value());
    CHECK(c.note->find("confidence radius 0.9") == std::string::npos);
  }
  cfg.order = 6;
  CHECK_THROWS_AS(run_verification(cfg), InvalidInput);
}
