#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "illposed/errors.hpp"
#include "illposed/experiments.hpp"

using namespace illposed;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioConfig small_burgers() {
  ScenarioConfig cfg;
  cfg.points_1d = 1 << 17;
  cfg.j_max_1d = 10;
  cfg.n_list = {9, 10};
  return cfg;
}

const GapReport& burgers_report() {
  static const GapReport r = run_burgers_gap(small_burgers());
  return r;
}

}  // namespace

TEST_CASE("fit_order") {
  const std::vector<double> ts{0.1, 0.2, 0.4, 0.8};
  std::vector<double> sq, lin;
  for (double t : ts) {
    sq.push_back(t * t);
    lin.push_back(3.7 * t);
  }
  CHECK(std::abs(fit_order(ts, sq) - 2.0) <= 1e-12);
  CHECK(std::abs(fit_order(ts, lin) - 1.0) <= 1e-12);
  CHECK_THROWS_AS(fit_order({0.1, 0.2}, {1.0, 2.0}), DegenerateFit);
  CHECK_THROWS_AS(fit_order({0.1, 0.2, 0.3}, {1.0, 0.0, 2.0}), DegenerateFit);
}

TEST_CASE("parallel_for") {
  std::atomic<int> sum{0};
  parallel_for(100, 4, [&](std::size_t i) { sum += static_cast<int>(i); });
  CHECK(sum == 4950);
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                    if (i == 7) throw ConfigError("boom");
                  }),
                  ConfigError);
}

TEST_CASE("scenario validation") {
  ScenarioConfig cfg;
  CHECK_NOTHROW(cfg.validate(1));
  CHECK_THROWS_AS(cfg.validate(2), ConfigError);  // s = 2 is not above 1 + 2/2
  cfg.s = 2.5;
  CHECK_NOTHROW(cfg.validate(2));
  cfg.p = 0.5;
  CHECK_THROWS_AS(cfg.validate(1), ConfigError);
  cfg.p = kInf;
  cfg.s = 1.01;
  CHECK_NOTHROW(cfg.validate(2));
  cfg.n_list.clear();
  CHECK_THROWS_AS(cfg.validate(1), ConfigError);
  const ScenarioConfig e = ScenarioConfig::defaults(Scenario::EulerGap);
  CHECK(e.s == 2.5);
  CHECK_NOTHROW(e.validate(2));
}

TEST_CASE("burgers gap at reduced resolution") {
  const GapReport& r = burgers_report();
  REQUIRE(r.rows.size() == 2);
  for (const auto& row : r.rows) {
    CHECK(row.status == "ok");
    CHECK(row.besov_gap >= row.block_gap - 1e-12);
    CHECK(row.block_gap >= row.floor_estimate - row.cascade_budget);
    CHECK(row.floor_estimate > 0.0);
  }
  CHECK(r.rows[0].n * r.rows[0].init_dist == doctest::Approx(r.rows[1].n * r.rows[1].init_dist).epsilon(0.01));
  CHECK(r.rows[1].init_dist < r.rows[0].init_dist);
  CHECK(r.rows[1].cascade_budget < r.rows[0].cascade_budget);
  CHECK(r.passed());
}

TEST_CASE("burgers gap p = inf witnesses gamma at the origin") {
  ScenarioConfig cfg = small_burgers();
  cfg.p = kInf;
  cfg.n_list = {10};
  const GapReport r = run_burgers_gap(cfg);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].analytic_floor == 48.0);
  CHECK(r.rows[0].origin_gap >= 1.0);
}

TEST_CASE("shock rows are reported, not thrown") {
  ScenarioConfig cfg = small_burgers();
  cfg.n_list = {6, 9};
  const GapReport r = run_burgers_gap(cfg);
  CHECK(r.rows[0].status == "shock");
  CHECK(r.rows[1].status == "ok");
  CHECK_FALSE(r.passed());
}

TEST_CASE("gap csv is reproducible") {
  const auto dir = fs::temp_directory_path() / "illposed_gap_csv";
  fs::create_directories(dir);
  burgers_report().write_csv(dir / "a.csv");
  run_burgers_gap(small_burgers()).write_csv(dir / "b.csv");
  const std::string a = slurp(dir / "a.csv"), b = slurp(dir / "b.csv");
  // Identical apart from the wall-time footer.
  const auto strip = [](const std::string& s) {
    std::stringstream in(s), out;
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("#wall_time", 0) != 0) out << line << '\n';
    }
    return out.str();
  };
  CHECK(strip(a) == strip(b));
  CHECK(a.rfind("n,t_n,init_dist,block_gap,besov_gap", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("euler gap and time-zero at reduced resolution") {
  ScenarioConfig cfg = ScenarioConfig::defaults(Scenario::EulerGap);
  cfg.points_2d = 512;
  cfg.j_max_2d = 3;
  cfg.n_list = {3};
  const GapReport r = run_euler_gap(cfg);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].status == "ok");
  CHECK(r.rows[0].besov_gap >= r.rows[0].block_gap - 1e-12);
  CHECK(r.rows[0].floor_estimate > 0.0);

  const GapReport z = run_time_discontinuity(cfg);
  REQUIRE(z.rows.size() == 1);
  CHECK(z.rows[0].besov_gap > 0.0);
  CHECK(z.rows[0].analytic_floor > 0.0);

  cfg.n_list = {5};
  CHECK_THROWS_AS(run_euler_gap(cfg), UnresolvedShell);
}

TEST_CASE("lemma groups") {
  ScenarioConfig cfg;
  const LemmaReport r = run_lemma_group(cfg, "littlewood-paley");
  CHECK(r.passed("littlewood-paley"));
  CHECK_FALSE(r.passed("cosine"));
  CHECK_THROWS_AS(run_lemma_group(cfg, "nope"), ConfigError);
}
