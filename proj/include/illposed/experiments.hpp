#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "illposed/fit.hpp"
#include "illposed/interpolation.hpp"
#include "illposed/littlewood_paley.hpp"
#include "illposed/transport1d.hpp"

namespace illposed {

enum class Scenario { BurgersGap, EulerGap, TimeDiscontinuity, LemmaSuite, CascadeOrders };

const char* scenario_name(Scenario s);

struct ScenarioConfig {
  Scenario which = Scenario::BurgersGap;
  double s = 2.0;
  double p = 2.0;
  std::vector<int> n_list{9, 10, 11, 12};

  int points_1d = 1 << 20;
  double half_width_1d = 16.0;
  int j_max_1d = 13;
  int points_2d = 1024;
  double half_width_2d = 8.0;
  int j_max_2d = 4;

  int cascade_n = 8;
  /// Largest cascade time; 0 picks t_10.
  double cascade_t = 0.0;
  std::string cascade_rhs = "identity";
  int cascade_points = 1 << 17;
  int cascade_j_max = 9;

  PeriodicInterpolator::Options interp_1d{4, 10};
  PeriodicInterpolator::Options interp_2d{4, 8};
  int jobs = 1;
  std::filesystem::path output_dir = ".";

  /// 2D scenarios default to s = 2.5 and n = 3..4.
  static ScenarioConfig defaults(Scenario which);

  /// Throws ConfigError unless s > 1 + dim/p and the lists are sane.
  void validate(int dim) const;
};

struct GapRow {
  int n = 0;
  double t_n = 0.0;
  double init_dist = 0.0;
  double block_gap = 0.0;       // 2^{ns} |Delta_n (u_n - u)(t_n)|_p (2D: second component)
  double besov_gap = 0.0;       // |u_n(t_n) - u(t_n)|_{B^s}
  double floor_estimate = 0.0;  // 2^{ns} |ap4 pair difference|_p
  double cascade_budget = 0.0;  // measured sum of the approximation errors
  double analytic_floor = 0.0;
  double origin_gap = 0.0;      // ap4 pair gap at the origin
  std::string status = "ok";
};

struct GapCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GapReport {
  std::string scenario;
  BesovIndex idx;
  std::string grid;
  double wall_time = 0.0;
  std::vector<GapRow> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<GapCheck> checks;

  bool passed() const;
  void write_csv(const std::filesystem::path& path) const;
};

GapReport run_burgers_gap(const ScenarioConfig& cfg);
GapReport run_euler_gap(const ScenarioConfig& cfg);
GapReport run_time_discontinuity(const ScenarioConfig& cfg);

/// Copy of a burgers-gap or euler-gap report keeping rows with n >= n_min,
/// checks re-evaluated against the new first row.
GapReport restrict_rows(const GapReport& r, int n_min);

struct LemmaEntry {
  std::string group;
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool upper = true;  // value <= threshold when true, value >= threshold otherwise
  bool pass = false;
};

struct LemmaReport {
  std::vector<LemmaEntry> entries;
  double wall_time = 0.0;

  bool passed() const;
  bool passed(const std::string& group) const;
  void write_csv(const std::filesystem::path& path) const;
};

LemmaReport run_lemma_suite(const ScenarioConfig& cfg);
/// One group only: littlewood-paley, constructions, cosine, commutator, projectors.
LemmaReport run_lemma_group(const ScenarioConfig& cfg, const std::string& group);

CascadeTable run_cascade(const ScenarioConfig& cfg);
/// Fitted orders against the expected 2, 1, 1, 2 (tolerances 0.2, 0.15, 0.15, 0.2).
std::vector<GapCheck> cascade_checks(const CascadeTable& table);

/// Runs f(i) for i in [0, count) on up to `jobs` threads. The first
/// exception is rethrown after all workers stop.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f);

}  // namespace illposed
