#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "illposed/config.hpp"
#include "illposed/errors.hpp"
#include "illposed/experiments.hpp"
#include "illposed/field_io.hpp"

namespace fs = std::filesystem;
using namespace illposed;

namespace {

struct Args {
  std::string config;
  std::vector<std::string> sets;
  std::string output_dir;
  int jobs = 0;
  std::string n;
  double s = std::nan("");
  double p = std::nan("");
  std::string group;
  std::string input;
  int j_max = -1;
};

ScenarioConfig load(const Args& a, Scenario which) {
  ScenarioConfig cfg = ScenarioConfig::defaults(which);
  if (!a.config.empty()) apply_config(cfg, parse_config_file(a.config));
  std::vector<ConfigEntry> over;
  for (const auto& s : a.sets) over.push_back(parse_override(s));
  apply_config(cfg, over);
  if (!a.n.empty()) cfg.n_list = parse_int_list(a.n);
  if (!std::isnan(a.s)) cfg.s = a.s;
  if (!std::isnan(a.p)) cfg.p = a.p;
  if (a.jobs > 0) cfg.jobs = a.jobs;
  if (!a.output_dir.empty()) {
    cfg.output_dir = a.output_dir;
  } else if (const char* env = std::getenv("ILLPOSED_OUTPUT_DIR"); env && *env) {
    cfg.output_dir = env;
  }
  fs::create_directories(cfg.output_dir);
  return cfg;
}

void print(const GapReport& r) {
  std::cout << r.scenario << "  s=" << r.idx.s << " p=" << r.idx.p << "  " << r.grid << '\n';
  std::cout << "  n        t_n   init_dist   block_gap   besov_gap       floor      budget  status\n";
  for (const auto& row : r.rows) {
    std::printf("%3d %10.4g %11.4g %11.4g %11.4g %11.4g %11.4g  %s\n", row.n, row.t_n, row.init_dist, row.block_gap,
                row.besov_gap, row.floor_estimate, row.cascade_budget, row.status.c_str());
  }
  for (const auto& c : r.checks) {
    std::cout << "  " << (c.pass ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
  }
  std::printf("  wall time %.1f s\n", r.wall_time);
}

int finish_gap(const GapReport& r, const ScenarioConfig& cfg, const std::string& file) {
  const fs::path out = cfg.output_dir / file;
  r.write_csv(out);
  print(r);
  std::cout << "  wrote " << out.string() << '\n';
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Besov-norm spectral toolkit and non-continuous-dependence experiments"};
  app.require_subcommand(1);
  Args a;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", a.config, "key = value config file")->check(CLI::ExistingFile);
    sub->add_option("--set", a.sets, "override, key=value (repeatable)");
    sub->add_option("--output-dir", a.output_dir, "output directory (default $ILLPOSED_OUTPUT_DIR or .)");
    sub->add_option("--jobs", a.jobs, "worker threads");
    sub->add_option("--s", a.s, "regularity index");
    sub->add_option("--p", a.p, "integrability index (inf allowed)");
  };

  auto* lemmas = app.add_subcommand("lemmas", "lemma-level numerical checks");
  common(lemmas);
  lemmas->add_option("--group", a.group, "single group: littlewood-paley, constructions, cosine, commutator, projectors");
  auto* cascade = app.add_subcommand("cascade", "approximant cascade error orders (1D)");
  common(cascade);
  auto* burgers = app.add_subcommand("burgers-gap", "1D Burgers solution gap");
  common(burgers);
  burgers->add_option("--n", a.n, "shell list, e.g. 8..12");
  auto* euler = app.add_subcommand("euler-gap", "2D Euler solution gap");
  common(euler);
  euler->add_option("--n", a.n, "shell list, e.g. 3..4");
  auto* tzero = app.add_subcommand("time-zero", "2D Euler discontinuity at t = 0");
  common(tzero);
  tzero->add_option("--n", a.n, "shell list");
  auto* norm = app.add_subcommand("norm", "Besov norm of a stored field");
  norm->add_option("--input", a.input, "field binary")->required()->check(CLI::ExistingFile);
  norm->add_option("--s", a.s, "regularity index")->required();
  norm->add_option("--p", a.p, "integrability index (inf allowed)")->required();
  norm->add_option("--j-max", a.j_max, "highest shell (default: highest resolved)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (norm->parsed()) {
      const Field u = read_field(a.input);
      const BesovIndex idx{a.s, a.p};
      const double v = a.j_max >= 0 ? besov_norm(u, idx, a.j_max) : besov_norm(u, idx);
      std::cout.precision(15);
      std::cout << v << '\n';
      return 0;
    }

    Scenario which = Scenario::LemmaSuite;
    if (cascade->parsed()) which = Scenario::CascadeOrders;
    if (burgers->parsed()) which = Scenario::BurgersGap;
    if (euler->parsed()) which = Scenario::EulerGap;
    if (tzero->parsed()) which = Scenario::TimeDiscontinuity;
    ScenarioConfig cfg = load(a, which);
    if (lemmas->parsed()) {
      cfg.validate(1);
      const LemmaReport r = a.group.empty() ? run_lemma_suite(cfg) : run_lemma_group(cfg, a.group);
      const fs::path out = cfg.output_dir / "lemmas.csv";
      r.write_csv(out);
      for (const auto& e : r.entries) {
        std::printf("%-5s %-17s %-28s %12.4g %s %.4g\n", e.pass ? "pass" : "FAIL", e.group.c_str(), e.name.c_str(),
                    e.value, e.upper ? "<=" : ">=", e.threshold);
      }
      std::printf("wall time %.1f s, wrote %s\n", r.wall_time, out.string().c_str());
      return r.passed() ? 0 : 1;
    }
    if (cascade->parsed()) {
      const CascadeTable t = run_cascade(cfg);
      const fs::path out = cfg.output_dir / "cascade.csv";
      t.write_csv(out);
      std::cout << "cascade n=" << t.n << " rhs=" << t.rhs << '\n';
      std::cout << "          t    err_ap1    err_ap2    err_ap3    err_ap4\n";
      for (const auto& r : t.rows) {
        std::printf("%11.4g %10.4g %10.4g %10.4g %10.4g\n", r.t, r.err_ap1, r.err_ap2, r.err_ap3, r.err_ap4);
      }
      bool ok = true;
      for (const auto& c : cascade_checks(t)) {
        ok = ok && c.pass;
        std::cout << (c.pass ? "pass " : "FAIL ") << c.name << "  " << c.detail << '\n';
      }
      std::cout << "wrote " << out.string() << '\n';
      return ok ? 0 : 1;
    }
    if (burgers->parsed()) return finish_gap(run_burgers_gap(cfg), cfg, "burgers_gap.csv");
    if (euler->parsed()) return finish_gap(run_euler_gap(cfg), cfg, "euler_gap.csv");
    if (tzero->parsed()) return finish_gap(run_time_discontinuity(cfg), cfg, "time_zero.csv");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const UnresolvedShell& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
