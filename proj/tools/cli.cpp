// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "lunehankel/bound_engine.hpp"
#include "lunehankel/errors.hpp"
#include "lunehankel/log_hankel.hpp"
#include "lunehankel/lune.hpp"
#include "lunehankel/parallel.hpp"
#include "lunehankel/verification.hpp"

namespace lunehankel::cli {
namespace {

using json = nlohmann::ordered_json;

// Thrown for problems with flags, config files or their values.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kYmaxOracleTol = 1e-4;

struct Settings {
  std::string output;
  std::string config;
  std::string cls;
  std::string function;
  int order = kDefaultOrder;
  SearchConfig search;
  std::optional<int> samples;
  std::vector<double> radius{0.5, 0.8, 0.9};
  double A = 0.0, B = 0.0, C = 0.0;
  bool oracle = false;
  int oracle_radial = 128;
  int oracle_angular = 512;
  std::uint64_t seed = VerificationConfig{}.seed;
};

// Config-file keys, each tied to the flag it stands in for.
using Setter = std::function<void(Settings&, const json&)>;
const std::map<std::string, Setter>& config_setters() {
  static const std::map<std::string, Setter> setters{
      {"class", [](Settings& s, const json& v) { s.cls = v.get<std::string>(); }},
      {"function", [](Settings& s, const json& v) { s.function = v.get<std::string>(); }},
      {"order", [](Settings& s, const json& v) { s.order = v.get<int>(); }},
      {"tau1-steps", [](Settings& s, const json& v) { s.search.tau1_steps = v.get<int>(); }},
      {"tau2-radial", [](Settings& s, const json& v) { s.search.tau2_radial = v.get<int>(); }},
      {"tau2-angular", [](Settings& s, const json& v) { s.search.tau2_angular = v.get<int>(); }},
      {"refine-depth", [](Settings& s, const json& v) { s.search.refine_depth = v.get<int>(); }},
      {"samples", [](Settings& s, const json& v) { s.samples = v.get<int>(); }},
      {"radius",
       [](Settings& s, const json& v) {
         s.radius = v.is_array() ? v.get<std::vector<double>>() : std::vector{v.get<double>()};
       }},
      {"oracle", [](Settings& s, const json& v) { s.oracle = v.get<bool>(); }},
      {"oracle-radial", [](Settings& s, const json& v) { s.oracle_radial = v.get<int>(); }},
      {"oracle-angular", [](Settings& s, const json& v) { s.oracle_angular = v.get<int>(); }},
      {"seed", [](Settings& s, const json& v) { s.seed = v.get<std::uint64_t>(); }},
      {"A", [](Settings& s, const json& v) { s.A = v.get<double>(); }},
      {"B", [](Settings& s, const json& v) { s.B = v.get<double>(); }},
      {"C", [](Settings& s, const json& v) { s.C = v.get<double>(); }},
  };
  return setters;
}

// Options of one subcommand, keyed like the config file.
using OptionMap = std::map<std::string, CLI::Option*>;

// Fills settings from the config file for every key whose flag was not given.
void apply_config(Settings& s, const OptionMap& opts) {
  if (s.config.empty()) return;
  std::ifstream in(s.config);
  if (!in) throw UsageError("cannot read config file " + s.config);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file " + s.config + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  const auto& setters = config_setters();
  for (const auto& [key, value] : doc.items()) {
    const auto setter = setters.find(key);
    if (setter == setters.end()) throw UsageError("unknown config key '" + key + "'");
    const auto opt = opts.find(key);
    if (opt == opts.end() || opt->second->count() > 0) continue;
    try {
      setter->second(s, value);
    } catch (const json::exception& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

ClassId require_class(const std::string& name) {
  if (name.empty()) throw UsageError("--class is required (starlike or convex)");
  const auto cls = parse_class(name);
  if (!cls) throw UsageError("unknown class '" + name + "' (expected starlike or convex)");
  return *cls;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void emit(const json& doc, const Settings& s, std::ostream& out) {
  if (s.output.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(s.output);
  if (!file) throw UsageError("cannot write " + s.output);
  file << doc.dump(2) << '\n';
  out << "report written to " << s.output << '\n';
}

json search_json(const SearchReport& r) {
  return {{"class", std::string(to_string(r.class_tag))},
          {"sup_found", r.sup_found},
          {"argmax",
           {{"tau1", r.argmax.tau1()},
            {"tau2", complex_json(r.argmax.tau2())},
            {"tau3", complex_json(r.argmax.tau3())}}},
          {"value_at_argmax", complex_json(r.value_at_argmax)},
          {"theoretical_bound", r.theoretical_bound},
          {"gap", r.gap},
          {"bound_respected", r.bound_respected},
          {"grid_stats",
           {{"tau1_steps", r.grid_stats.tau1_steps},
            {"tau2_radial", r.grid_stats.tau2_radial},
            {"tau2_angular", r.grid_stats.tau2_angular},
            {"refine_depth", r.grid_stats.refine_depth},
            {"evaluations", r.grid_stats.evaluations},
            {"sup_by_depth", r.grid_stats.sup_by_depth}}},
          {"branch_trace", r.branch_trace}};
}

void search_table(const SearchReport& r, std::ostream& out) {
  out << "class              " << to_string(r.class_tag) << '\n'
      << "sup found          " << fmt("%.12g", r.sup_found) << '\n'
      << "theoretical bound  " << fmt("%.12g", r.theoretical_bound) << '\n'
      << "gap                " << fmt("%.3e", r.gap) << '\n'
      << "argmax tau1        " << fmt("%.9f", r.argmax.tau1()) << '\n'
      << "argmax tau2        " << fmt("%.9f", r.argmax.tau2().real()) << " "
      << fmt("%+.9fi", r.argmax.tau2().imag()) << '\n'
      << "branch             " << r.branch_trace << '\n'
      << "bound respected    " << (r.bound_respected ? "yes" : "NO") << '\n';
}

json branch_counts(const std::array<std::size_t, kYBranchCount>& hits) {
  json j = json::object();
  for (auto b : kAllYBranches) j[std::string(to_string(b))] = hits[static_cast<std::size_t>(b)];
  return j;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  VerificationConfig cfg;
  cfg.order = s.order;
  cfg.search = s.search;
  if (s.samples) cfg.oracle_samples = static_cast<std::size_t>(*s.samples);
  cfg.oracle_radial = s.oracle_radial;
  cfg.oracle_angular = s.oracle_angular;
  cfg.seed = s.seed;
  if (cfg.order < 8) throw UsageError("--order must be >= 8 for verify");
  if ((s.samples && *s.samples < 0) ||
      cfg.oracle_samples < cfg.branch_min_hits * kYBranchCount) {
    throw UsageError("--samples must be at least " +
                     std::to_string(cfg.branch_min_hits * kYBranchCount) + " for verify");
  }

  const auto rep = run_verification(cfg, [&err](int c) { err << "criterion " << c << " done\n"; });

  char line[256];
  std::snprintf(line, sizeof line, "%-3s %-40s %-14s %-14s %-9s %s\n", "#", "check", "expected",
                "observed", "tol", "result");
  out << line;
  for (const auto& c : rep.checks) {
    std::snprintf(line, sizeof line, "%-3d %-40s %-14.8g %-14.8g %-9.1e %s\n", c.criterion,
                  c.id.c_str(), c.expected, c.observed, c.tolerance, c.pass ? "PASS" : "FAIL");
    out << line;
  }
  for (const auto& c : rep.checks) {
    if (c.id == "convex.constant.23_3264_vs_23_32640" && c.note) out << "note: " << *c.note << '\n';
  }
  out << "overall " << (rep.pass ? "PASS" : "FAIL") << " (" << rep.checks.size() << " checks, "
      << fmt("%.2f", rep.runtime_seconds) << " s)\n";

  json checks = json::array();
  for (const auto& c : rep.checks) {
    json j{{"id", c.id},       {"anchor", c.anchor},       {"expected", c.expected},
           {"observed", c.observed}, {"tolerance", c.tolerance}, {"pass", c.pass},
           {"criterion", c.criterion}};
    if (c.note) j["note"] = *c.note;
    checks.push_back(std::move(j));
  }
  json timing{{"runtime_seconds", rep.runtime_seconds}, {"criteria", json::object()}};
  for (const auto& [n, secs] : rep.criterion_seconds) timing["criteria"][std::to_string(n)] = secs;

  const json doc{
      {"suite", rep.suite},
      {"pass", rep.pass},
      {"checks", std::move(checks)},
      {"config",
       {{"order", cfg.order},
        {"oracle_samples", cfg.oracle_samples},
        {"oracle_grid", {cfg.oracle_radial, cfg.oracle_angular}},
        {"oracle_tol", cfg.oracle_tol},
        {"branch_min_hits", cfg.branch_min_hits},
        {"coeff_samples", cfg.coeff_samples},
        {"rotation_samples", cfg.rotation_samples},
        {"search",
         {{"tau1_steps", cfg.search.tau1_steps},
          {"tau2_radial", cfg.search.tau2_radial},
          {"tau2_angular", cfg.search.tau2_angular},
          {"refine_depth", cfg.search.refine_depth}}},
        {"membership",
         {{"radii", cfg.membership_radii},
          {"samples", cfg.membership_samples},
          {"tol", cfg.membership_tol}}},
        {"seed", cfg.seed}}},
      {"branch_coverage",
       {{"oracle_samples", branch_counts(rep.oracle_branch_hits)},
        {"starlike_curve", branch_counts(rep.starlike_branch_hits)},
        {"convex_curve", branch_counts(rep.convex_branch_hits)}}},
      {"searches",
       {{"starlike", search_json(*rep.starlike_search)},
        {"convex", search_json(*rep.convex_search)}}},
      {"timing", std::move(timing)}};
  emit(doc, s, out);
  return rep.pass ? kExitPass : kExitFailure;
}

int cmd_search(const Settings& s, std::ostream& out) {
  const ClassId cls = require_class(s.cls);
  const auto rep = global_search(cls, s.search);
  search_table(rep, out);
  emit(search_json(rep), s, out);
  return rep.bound_respected ? kExitPass : kExitFailure;
}

struct NamedSeries {
  TruncatedSeries series;
  // Known closed values, indexed by degree.
  std::map<int, double> reference;
};

NamedSeries named_series(const std::string& name, int order) {
  // The extremal constructions need a few terms; truncate afterwards.
  const int work = std::max(order, 8);
  const double a3_h0 = std::sqrt(69.0) / (4.0 * std::sqrt(17.0));
  if (name == "g") {
    return {extremal_g(work).truncated(order),
            {{0, 0.0}, {1, 1.0}, {2, 0.0}, {3, 0.5}, {4, 0.0}, {5, 0.25}, {7, 1.0 / 12.0},
             {9, 1.0 / 96.0}}};
  }
  if (name == "h0") {
    return {extremal_h(work).h0.truncated(order),
            {{0, 0.0}, {1, 1.0}, {2, 0.0}, {3, a3_h0}, {4, 0.0},
             {5, 69.0 / 544.0 + std::sqrt(69.0) / (16.0 * std::sqrt(17.0))}}};
  }
  if (name == "h") {
    return {extremal_h(work).h.truncated(order),
            {{0, 0.0}, {1, 1.0}, {2, 0.0}, {3, std::sqrt(69.0) / (12.0 * std::sqrt(17.0))},
             {4, 0.0}}};
  }
  if (name == "q") {
    return {q_series(work).truncated(order),
            {{0, 1.0}, {1, 1.0}, {2, 0.5}, {3, 0.0}, {4, -0.125}}};
  }
  if (name == "koebe") {
    std::map<int, double> ref;
    for (int n = 0; n <= order; ++n) ref[n] = n;
    return {koebe(work).truncated(order), std::move(ref)};
  }
  throw UsageError("unknown function '" + name + "' (expected g, h0, h, q or koebe)");
}

int cmd_series(const Settings& s, std::ostream& out) {
  if (s.function.empty()) throw UsageError("--function is required (g, h0, h, q or koebe)");
  if (s.order < 2) throw UsageError("--order must be >= 2 for series");
  const auto named = named_series(s.function, s.order);

  char line[160];
  std::snprintf(line, sizeof line, "%-4s %-24s %-24s %s\n", "n", "observed", "reference", "diff");
  out << line;
  json coeffs = json::array();
  for (int n = 0; n <= s.order; ++n) {
    const Complex a = named.series[n];
    json j{{"n", n}, {"value", complex_json(a)}};
    const auto ref = named.reference.find(n);
    std::string ref_text = "-";
    std::string diff_text = "";
    if (ref != named.reference.end()) {
      j["reference"] = ref->second;
      j["diff"] = std::abs(a - ref->second);
      ref_text = fmt("%.17g", ref->second);
      diff_text = fmt("%.2e", std::abs(a - ref->second));
    } else {
      j["reference"] = nullptr;
    }
    std::snprintf(line, sizeof line, "%-4d %-24.17g %-24s %s\n", n, a.real(), ref_text.c_str(),
                  diff_text.c_str());
    out << line;
    coeffs.push_back(std::move(j));
  }
  emit({{"function", s.function}, {"order", s.order}, {"coefficients", std::move(coeffs)}}, s, out);
  return kExitPass;
}

int cmd_ymax(const Settings& s, std::ostream& out) {
  const YArgs args{s.A, s.B, s.C};
  const auto closed = y_closed(args);
  json doc{{"A", s.A}, {"B", s.B}, {"C", s.C}, {"value", closed.value},
           {"branch", std::string(to_string(closed.branch))}};
  out << "Y(" << s.A << ", " << s.B << ", " << s.C << ") = " << fmt("%.12g", closed.value)
      << "  [" << to_string(closed.branch) << "]\n";
  bool ok = true;
  if (s.oracle) {
    if (s.oracle_radial < 64 || s.oracle_angular < 64) {
      throw UsageError("oracle grid needs at least 64 radial and 64 angular steps");
    }
    const double oracle = y_oracle(args, s.oracle_radial, s.oracle_angular);
    const double gap = std::abs(oracle - closed.value);
    ok = gap <= kYmaxOracleTol;
    doc["oracle"] = {{"value", oracle},
                     {"discrepancy", gap},
                     {"tolerance", kYmaxOracleTol},
                     {"grid", {s.oracle_radial, s.oracle_angular}},
                     {"agree", ok}};
    out << "oracle = " << fmt("%.12g", oracle) << "  discrepancy " << fmt("%.2e", gap)
        << (ok ? "" : "  EXCEEDS TOLERANCE") << '\n';
  }
  emit(doc, s, out);
  return ok ? kExitPass : kExitFailure;
}

int cmd_membership(const Settings& s, std::ostream& out) {
  if (s.function.empty()) throw UsageError("--function is required (g, h0, h or koebe)");
  const ClassId cls = require_class(s.cls);
  for (double r : s.radius) {
    if (!(r > 0.0)) throw UsageError("--radius must be positive");
    if (r > kMaxMembershipRadius) {
      throw UsageError(
          "--radius must be <= 0.9: beyond that the truncation tail of the order-128 series "
          "exceeds the 1e-3 sampling tolerance");
    }
  }
  if (s.function == "q") throw UsageError("membership applies to g, h0, h or koebe");
  if (s.order < 8) throw UsageError("--order must be >= 8 for membership");
  const int samples = s.samples.value_or(720);
  if (samples < 1) throw UsageError("--samples must be positive");

  const auto f = named_series(s.function, s.order).series;
  const auto rep = membership_check(f, cls, s.radius, samples);
  out << "function          " << s.function << " (" << to_string(cls) << ")\n"
      << "result            " << (rep.passed ? "PASS" : "FAIL") << '\n'
      << "worst margin      " << fmt("%.9g", rep.worst_margin) << " at r=" << rep.where.radius
      << " theta=" << fmt("%.6f", rep.where.angle) << '\n'
      << "samples           " << rep.samples << '\n'
      << "confidence radius " << fmt("%.6f", rep.confidence_radius) << '\n';
  emit({{"function", s.function},
        {"class", std::string(to_string(cls))},
        {"radii", s.radius},
        {"samples", rep.samples},
        {"tol", rep.tol},
        {"pass", rep.passed},
        {"worst_margin", rep.worst_margin},
        {"where", {{"radius", rep.where.radius}, {"angle", rep.where.angle}}},
        {"coeff_bound", rep.coeff_bound},
        {"confidence_radius", rep.confidence_radius}},
       s, out);
  return rep.passed ? kExitPass : kExitFailure;
}

void add_search_flags(CLI::App& sub, Settings& s, OptionMap& opts) {
  opts["tau1-steps"] = sub.add_option("--tau1-steps", s.search.tau1_steps, "tau1 grid intervals");
  opts["tau2-radial"] = sub.add_option("--tau2-radial", s.search.tau2_radial, "tau2 radial steps");
  opts["tau2-angular"] =
      sub.add_option("--tau2-angular", s.search.tau2_angular, "tau2 angular steps");
  opts["refine-depth"] =
      sub.add_option("--refine-depth", s.search.refine_depth, "local refinement rounds");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hankel determinant bounds for the lune classes"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  std::map<std::string, OptionMap> options;

  app.add_option("--output", s.output, "write the JSON report here");
  app.add_option("--config", s.config, "JSON file with default flag values")
      ->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  auto& vo = options["verify"];
  vo["order"] = verify->add_option("--order", s.order, "truncation order");
  vo["samples"] = verify->add_option("--samples", s.samples, "Y oracle samples");
  add_search_flags(*verify, s, vo);
  vo["oracle-radial"] = verify->add_option("--oracle-radial", s.oracle_radial);
  vo["oracle-angular"] = verify->add_option("--oracle-angular", s.oracle_angular);
  vo["seed"] = verify->add_option("--seed", s.seed, "sampling seed");

  auto* search = app.add_subcommand("search", "grid search for sup |H21| over one class");
  auto& so = options["search"];
  so["class"] = search->add_option("--class", s.cls, "starlike or convex");
  add_search_flags(*search, s, so);

  auto* series = app.add_subcommand("series", "Taylor coefficients of a named function");
  auto& eo = options["series"];
  eo["function"] = series->add_option("--function", s.function, "g, h0, h, q or koebe");
  eo["order"] = series->add_option("--order", s.order, "highest degree printed");

  auto* ymax = app.add_subcommand("ymax", "max of |A + Bz + Cz^2| + 1 - |z|^2 over the disk");
  auto& yo = options["ymax"];
  yo["A"] = ymax->add_option("-A", s.A);
  yo["B"] = ymax->add_option("-B", s.B);
  yo["C"] = ymax->add_option("-C", s.C);
  yo["oracle"] = ymax->add_flag("--oracle", s.oracle, "compare with the brute-force disk maximum");
  yo["oracle-radial"] = ymax->add_option("--oracle-radial", s.oracle_radial);
  yo["oracle-angular"] = ymax->add_option("--oracle-angular", s.oracle_angular);

  auto* member = app.add_subcommand("membership", "sampled lune membership of a named function");
  auto& mo = options["membership"];
  mo["function"] = member->add_option("--function", s.function, "g, h0, h or koebe");
  mo["class"] = member->add_option("--class", s.cls, "starlike or convex");
  mo["radius"] = member->add_option("--radius", s.radius, "sample radii, each <= 0.9");
  mo["samples"] = member->add_option("--samples", s.samples, "samples per circle");
  mo["order"] = member->add_option("--order", s.order, "truncation order");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    apply_config(s, options[active->get_name()]);
    if (active == verify) return cmd_verify(s, out, err);
    if (active == search) return cmd_search(s, out);
    if (active == series) return cmd_series(s, out);
    if (active == ymax) return cmd_ymax(s, out);
    return cmd_membership(s, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace lunehankel::cli
