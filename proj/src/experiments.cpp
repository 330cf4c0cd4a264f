#include "illposed/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "illposed/constructions.hpp"
#include "illposed/errors.hpp"
#include "illposed/euler2d.hpp"
#include "illposed/spectral.hpp"
#include "illposed/transport1d.hpp"

namespace illposed {

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::BurgersGap: return "burgers-gap";
    case Scenario::EulerGap: return "euler-gap";
    case Scenario::TimeDiscontinuity: return "time-zero";
    case Scenario::LemmaSuite: return "lemmas";
    case Scenario::CascadeOrders: return "cascade";
  }
  return "?";
}

ScenarioConfig ScenarioConfig::defaults(Scenario which) {
  ScenarioConfig cfg;
  cfg.which = which;
  if (which == Scenario::EulerGap || which == Scenario::TimeDiscontinuity) {
    cfg.s = 2.5;
    cfg.n_list = {3, 4};
  }
  return cfg;
}

void ScenarioConfig::validate(int dim) const {
  const double bound = 1.0 + dim / p;
  if (!(p >= 1.0)) throw ConfigError("p must lie in [1, inf]");
  if (!(s > bound)) {
    std::ostringstream os;
    os << "s = " << s << " must exceed 1 + d/p = " << bound;
    throw ConfigError(os.str());
  }
  if (n_list.empty()) throw ConfigError("empty n list");
  for (int n : n_list) {
    if (n < 1) throw ConfigError("n values must be positive");
  }
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string describe(const Grid& g) {
  std::ostringstream os;
  os << g.dim() << "D " << g.points() << "^" << g.dim() << " on [-" << g.half_width() << "pi, "
     << g.half_width() << "pi]";
  return os.str();
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Shared verdicts for the two gap scenarios.
void gap_checks(GapReport& r) {
  auto& rows = r.rows;
  bool all_ok = std::all_of(rows.begin(), rows.end(), [](const GapRow& x) { return x.status == "ok"; });
  std::string bad;
  for (const auto& x : rows) {
    if (x.status != "ok") bad += (bad.empty() ? "" : " ") + std::to_string(x.n) + ":" + x.status;
  }
  r.checks.push_back({"rows_computed", all_ok, bad.empty() ? "all rows computed" : bad});

  double worst = 0.0;
  bool decreasing = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    worst = std::max(worst, std::abs(rows[i].n * rows[i].init_dist / (rows[0].n * rows[0].init_dist) - 1.0));
    if (i && !(rows[i].init_dist < rows[i - 1].init_dist)) decreasing = false;
  }
  r.checks.push_back({"init_dist_law", worst <= 0.01, "max deviation of n*init_dist " + num(worst)});
  r.checks.push_back({"init_dist_decreasing", decreasing, ""});

  const bool first_ok = !rows.empty() && rows.front().status == "ok";
  double min_ratio = kInf;
  bool budget_down = true, dominate = true, decomposition = true;
  const GapRow* prev = nullptr;
  for (const auto& x : rows) {
    if (x.status != "ok") continue;
    if (first_ok) min_ratio = std::min(min_ratio, x.block_gap / rows.front().block_gap);
    if (prev && !(x.cascade_budget < prev->cascade_budget)) budget_down = false;
    if (x.besov_gap < x.block_gap - 1e-12) dominate = false;
    if (x.block_gap < x.floor_estimate - x.cascade_budget - 1e-9) decomposition = false;
    prev = &x;
  }
  r.checks.push_back({"floor_stable", first_ok && min_ratio >= 0.5,
                      first_ok ? "min block_gap ratio to n_min " + num(min_ratio) : "n_min row missing"});
  r.checks.push_back({"budget_monotone", budget_down && prev != nullptr, ""});
  r.checks.push_back({"besov_dominates_block", dominate, ""});
  r.checks.push_back({"gap_decomposition", decomposition, "block_gap >= floor_estimate - cascade_budget"});
}

GapRow failed_row(int n, const std::string& status) {
  GapRow row;
  row.n = n;
  row.t_n = time_sequence(n).t_n;
  row.status = status;
  const double nan = std::nan("");
  row.block_gap = row.besov_gap = row.floor_estimate = row.cascade_budget = row.origin_gap = nan;
  return row;
}

// 2^{ns} (|Delta_n(u - ap2)| + |Delta_n ap2 - ap3| + |ap3 - ap4|) for F = 0.
double burgers_budget(const Field& v, const Field& u, int n, double t, const BesovIndex& idx,
                      PeriodicInterpolator::Options interp) {
  FrozenOptions fo;
  fo.interp = interp;
  const FrozenCharacteristics1D fc(v, t, {}, fo);
  const Field ap2 = fc.transport(v);
  const Field block = dyadic_block(v, n);
  const Field ap3 = fc.transport(block);
  const Field ap4 = compose_shifted(block, v, t, interp);
  const Field dn_ap2 = dyadic_block(ap2, n);
  const double w = std::pow(2.0, n * idx.s);
  return w * (lp_norm(dyadic_block(u, n) - dn_ap2, idx.p) + lp_norm(dn_ap2 - ap3, idx.p) +
              lp_norm(ap3 - ap4, idx.p));
}

}  // namespace

bool GapReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const GapCheck& c) { return c.pass; });
}

void GapReport::write_csv(const std::filesystem::path& path) const {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path.string());
  os.precision(12);
  os << "n,t_n,init_dist,block_gap,besov_gap,floor_estimate,cascade_budget,analytic_floor,origin_gap,status\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.t_n << ',' << r.init_dist << ',' << r.block_gap << ',' << r.besov_gap << ','
       << r.floor_estimate << ',' << r.cascade_budget << ',' << r.analytic_floor << ',' << r.origin_gap << ','
       << r.status << '\n';
  }
  os << "#scenario," << scenario << "\n#s," << idx.s << "\n#p," << idx.p << "\n#grid," << grid << '\n';
  for (const auto& [k, v] : metadata) os << '#' << k << ',' << v << '\n';
  for (const auto& c : checks) os << "#check_" << c.name << ',' << (c.pass ? "pass" : "fail") << '\n';
  os << "#result," << (passed() ? "pass" : "fail") << '\n';
}

GapReport restrict_rows(const GapReport& r, int n_min) {
  if (r.scenario != scenario_name(Scenario::BurgersGap) && r.scenario != scenario_name(Scenario::EulerGap)) {
    throw ConfigError("row restriction applies to gap reports only");
  }
  GapReport out = r;
  out.rows.clear();
  out.checks.clear();
  for (const auto& row : r.rows) {
    if (row.n >= n_min) out.rows.push_back(row);
  }
  if (out.rows.empty()) throw ConfigError("no rows with n >= " + std::to_string(n_min));
  gap_checks(out);
  return out;
}

GapReport run_burgers_gap(const ScenarioConfig& cfg) {
  cfg.validate(1);
  const auto t0 = Clock::now();
  const Grid g(1, cfg.points_1d, cfg.half_width_1d);
  const ProfileSet prof = build_profiles(g, 1);
  DataSpec1D spec;
  spec.s = cfg.s;
  spec.j_max = cfg.j_max_1d;
  spec.N0 = scan_plateau(prof.phi);
  const Field u0 = build_u0_1d(spec, prof, g);
  const BesovIndex idx{cfg.s, cfg.p};
  const std::vector<int> ns = sorted_unique(cfg.n_list);
  for (int n : ns) {
    if (n > spec.j_max) throw ConfigError("n = " + std::to_string(n) + " exceeds the data shell range");
  }

  GapReport rep;
  rep.scenario = scenario_name(Scenario::BurgersGap);
  rep.idx = idx;
  rep.grid = describe(g);
  rep.rows.resize(ns.size());
  const double analytic = std::isinf(cfg.p) ? spec.gamma() : std::pow(2.0, -spec.N0 / cfg.p - 3.0);
  parallel_for(ns.size(), cfg.jobs, [&](std::size_t i) {
    const int n = ns[i];
    const double t = time_sequence(n).t_n;
    const Field u0n = build_perturbation_1d(u0, n, prof);
    GapRow row;
    try {
      row.n = n;
      row.t_n = t;
      row.analytic_floor = analytic;
      row.init_dist = besov_norm(u0n - u0, idx, spec.j_max);
      const Field u = solve_burgers_characteristics(u0, t, kShockMargin, cfg.interp_1d);
      const Field un = solve_burgers_characteristics(u0n, t, kShockMargin, cfg.interp_1d);
      const Field diff = un - u;
      const double w = std::pow(2.0, n * cfg.s);
      row.block_gap = w * lp_norm(dyadic_block(diff, n), cfg.p);
      row.besov_gap = besov_norm(diff, idx, max_resolved_shell(g));
      const Field a1 = ap4_closed_form(u0, n, t, cfg.interp_1d);
      const Field a2 = ap4_closed_form(u0n, n, t, cfg.interp_1d);
      row.floor_estimate = w * lp_norm(a2 - a1, cfg.p);
      const auto o = static_cast<std::size_t>(g.origin_index());
      row.origin_gap = w * std::abs(a2[o] - a1[o]);
      row.cascade_budget = burgers_budget(u0, u, n, t, idx, cfg.interp_1d) +
                           burgers_budget(u0n, un, n, t, idx, cfg.interp_1d);
    } catch (const ShockTooClose&) {
      const double d = row.init_dist;
      row = failed_row(n, "shock");
      row.init_dist = d;
      row.analytic_floor = analytic;
    } catch (const UnresolvedShell&) {
      const double d = row.init_dist;
      row = failed_row(n, "unresolved");
      row.init_dist = d;
      row.analytic_floor = analytic;
    }
    rep.rows[i] = row;
  });
  gap_checks(rep);
  rep.metadata = {{"N0", std::to_string(spec.N0)}, {"j_max", std::to_string(spec.j_max)},
                  {"gamma", num(spec.gamma())}};
  rep.wall_time = seconds_since(t0);
  rep.metadata.emplace_back("wall_time_s", num(rep.wall_time));
  return rep;
}

namespace {

struct EulerSetup {
  Grid grid;
  ProfileSet prof;
  DataSpec2D spec;
};

EulerSetup euler_setup(const ScenarioConfig& cfg) {
  cfg.validate(2);
  const Grid g(2, cfg.points_2d, cfg.half_width_2d);
  EulerSetup e{g, build_profiles(g, 2), {}};
  e.spec.s = cfg.s;
  e.spec.j_max = cfg.j_max_2d;
  e.spec.M0 = scan_plateau(e.prof.phi1);
  return e;
}

// Second component of 2^{ns}(|Delta_n(u - ap1)| + |Delta_n(ap1 - ap2)| + |Delta_n ap2 - ap3| + |ap3 - ap4|).
double euler_budget(const VectorField& v, const VectorField& u, int n, double t, const BesovIndex& idx,
                    PeriodicInterpolator::Options interp) {
  FrozenOptions2D fo;
  fo.interp = interp;
  const VectorField source = leray_complement(advect(v, v));
  const FrozenCharacteristics2D fc(v, t, {source}, fo);
  const Field ap2 = fc.transport(v.c2);
  const Field ap1 = ap2 + fc.integral(0).c2;
  const Field block = dyadic_block(v.c2, n);
  const Field ap3 = fc.transport(block);
  const Field ap4 = compose_shifted(block, v, t, interp);
  const Field dn_ap1 = dyadic_block(ap1, n);
  const Field dn_ap2 = dyadic_block(ap2, n);
  const double w = std::pow(2.0, n * idx.s);
  return w * (lp_norm(dyadic_block(u.c2, n) - dn_ap1, idx.p) + lp_norm(dn_ap1 - dn_ap2, idx.p) +
              lp_norm(dn_ap2 - ap3, idx.p) + lp_norm(ap3 - ap4, idx.p));
}

}  // namespace

GapReport run_euler_gap(const ScenarioConfig& cfg) {
  const auto t0 = Clock::now();
  const EulerSetup e = euler_setup(cfg);
  const Grid& g = e.grid;
  const VectorField u0 = build_u0_2d(e.spec, e.prof, g);
  const BesovIndex idx{cfg.s, cfg.p};
  const std::vector<int> ns = sorted_unique(cfg.n_list);
  for (int n : ns) require_resolved(g, n);
  for (int n : ns) {
    if (n > e.spec.j_max) throw ConfigError("n = " + std::to_string(n) + " exceeds the data shell range");
  }

  GapReport rep;
  rep.scenario = scenario_name(Scenario::EulerGap);
  rep.idx = idx;
  rep.grid = describe(g);
  rep.rows.resize(ns.size());
  const double d = 2.0;
  const double analytic = std::isinf(cfg.p) ? 2.0 : std::pow(2.0, -(d / cfg.p) * e.spec.M0 - d - 1.0);
  std::vector<double> energy_drift(ns.size(), 0.0);
  parallel_for(ns.size(), cfg.jobs, [&](std::size_t i) {
    const int n = ns[i];
    const double t = time_sequence(n).t_n;
    const VectorField u0n = build_perturbation_2d(u0, n, e.prof);
    GapRow row;
    row.n = n;
    row.t_n = t;
    row.analytic_floor = analytic;
    row.init_dist = besov_norm(u0n - u0, idx, max_resolved_shell(g));
    try {
      const VectorField u = solve_euler(u0, t);
      const VectorField un = solve_euler(u0n, t);
      energy_drift[i] = std::max(std::abs(kinetic_energy(u) / kinetic_energy(u0) - 1.0),
                                 std::abs(kinetic_energy(un) / kinetic_energy(u0n) - 1.0));
      const VectorField diff = un - u;
      const double w = std::pow(2.0, n * cfg.s);
      row.block_gap = w * lp_norm(dyadic_block(diff.c2, n), cfg.p);
      row.besov_gap = besov_norm(diff, idx, max_resolved_shell(g));
      const auto [a1, a2] = ap4_pair(u0, u0n, n, t, cfg.interp_2d);
      row.floor_estimate = w * lp_norm(a2.c2 - a1.c2, cfg.p);
      const int o = g.origin_index();
      row.origin_gap = w * std::abs(a2.c2.at(o, o) - a1.c2.at(o, o));
      row.cascade_budget = euler_budget(u0, u, n, t, idx, cfg.interp_2d) +
                           euler_budget(u0n, un, n, t, idx, cfg.interp_2d);
    } catch (const ShockTooClose&) {
      const double dist = row.init_dist;
      row = failed_row(n, "shock");
      row.init_dist = dist;
      row.analytic_floor = analytic;
    }
    rep.rows[i] = row;
  });
  gap_checks(rep);
  rep.metadata = {{"M0", std::to_string(e.spec.M0)},
                  {"j_max", std::to_string(e.spec.j_max)},
                  {"max_energy_drift", num(*std::max_element(energy_drift.begin(), energy_drift.end()))}};
  rep.wall_time = seconds_since(t0);
  rep.metadata.emplace_back("wall_time_s", num(rep.wall_time));
  return rep;
}

GapReport run_time_discontinuity(const ScenarioConfig& cfg) {
  const auto t0 = Clock::now();
  const EulerSetup e = euler_setup(cfg);
  const Grid& g = e.grid;
  const VectorField u0 = build_appendix_u0(cfg.s, e.prof, g, e.spec.j_max);
  const BesovIndex idx{cfg.s, cfg.p};
  const std::vector<int> ns = sorted_unique(cfg.n_list);
  for (int n : ns) {
    require_resolved(g, n);
    if (n > e.spec.j_max) throw ConfigError("n = " + std::to_string(n) + " exceeds the data shell range");
  }
  std::vector<double> times;
  for (int n : ns) times.push_back(time_sequence(n).t_n);
  const auto states = solve_euler_snapshots(u0, times);
  const PeriodicInterpolator U1(u0.c1, cfg.interp_2d);

  GapReport rep;
  rep.scenario = scenario_name(Scenario::TimeDiscontinuity);
  rep.idx = idx;
  rep.grid = describe(g);
  rep.rows.resize(ns.size());
  parallel_for(ns.size(), cfg.jobs, [&](std::size_t i) {
    const int n = ns[i];
    const double t = times[i];
    const VectorField& u = states[i].velocity;
    GapRow row;
    row.n = n;
    row.t_n = t;
    row.init_dist = 0.0;
    const VectorField diff = u - u0;
    const double w = std::pow(2.0, n * cfg.s);
    const Field b0 = dyadic_block(u0.c2, n);
    row.block_gap = w * lp_norm(dyadic_block(diff.c2, n), cfg.p);
    row.besov_gap = besov_norm(diff, idx, max_resolved_shell(g));
    const Field ap4 = compose_shifted(b0, u0, t, cfg.interp_2d);
    row.floor_estimate = w * lp_norm(ap4 - b0, cfg.p);
    row.cascade_budget = w * lp_norm(dyadic_block(u.c2, n) - ap4, cfg.p);
    // Closed-form sine difference on [0, 2 pi 2^-M0]^2.
    const double lam = carrier(n);
    row.analytic_floor = [&] {
      const double side = 2.0 * kPi * std::ldexp(1.0, -e.spec.M0);
      const int m1 = 32 * static_cast<int>(std::ceil(lam * side / (2.0 * kPi)));
      const int m2 = 64;
      Eigen::ArrayXd v(static_cast<Eigen::Index>(m1) * m2);
      Eigen::Index k = 0;
      for (int a = 0; a < m1; ++a) {
        const double x1 = (a + 0.5) * side / m1;
        for (int b = 0; b < m2; ++b) {
          const double x2 = (b + 0.5) * side / m2;
          v[k++] = std::sin(lam * x1 - kPi * U1(x1, x2)) - std::sin(lam * x1);
        }
      }
      return lp_norm(v, side * side / (static_cast<double>(m1) * m2), cfg.p);
    }();
    const int o = g.origin_index();
    row.origin_gap = w * std::abs(ap4.at(o, o) - b0.at(o, o));
    rep.rows[i] = row;
  });

  // Verdicts for the single-datum experiment.
  const auto& rows = rep.rows;
  double min_ratio = kInf;
  for (const auto& r : rows) min_ratio = std::min(min_ratio, r.besov_gap / rows.front().besov_gap);
  const double shrink = rows.front().t_n / rows.back().t_n;
  rep.checks.push_back({"gap_stable", min_ratio >= 0.5, "min besov_gap ratio to n_min " + num(min_ratio)});
  rep.checks.push_back({"time_shrinks_8x", shrink >= 8.0 - 1e-12, "t ratio " + num(shrink)});
  rep.metadata = {{"M0", std::to_string(e.spec.M0)}, {"j_max", std::to_string(e.spec.j_max)}};
  rep.wall_time = seconds_since(t0);
  rep.metadata.emplace_back("wall_time_s", num(rep.wall_time));
  return rep;
}

CascadeTable run_cascade(const ScenarioConfig& cfg) {
  cfg.validate(1);
  const Grid g(1, cfg.cascade_points, cfg.half_width_1d);
  const ProfileSet prof = build_profiles(g, 1);
  DataSpec1D spec;
  spec.s = cfg.s;
  spec.j_max = cfg.cascade_j_max;
  const Field u0 = build_u0_1d(spec, prof, g);
  const double T = cfg.cascade_t > 0.0 ? cfg.cascade_t : time_sequence(10).t_n;
  RhsHook F;
  if (cfg.cascade_rhs == "identity") {
    F = identity_rhs();
  } else if (cfg.cascade_rhs == "zero") {
    F = zero_rhs();
  } else {
    throw ConfigError("unknown rhs '" + cfg.cascade_rhs + "' (identity or zero)");
  }
  CascadeOptions opt;
  opt.norm_j_max = std::min(max_resolved_shell(g), spec.j_max + 1);
  opt.frozen.interp = cfg.interp_1d;
  return cascade_errors(u0, cfg.cascade_n, {T / 8, T / 4, T / 2, T}, {cfg.s, cfg.p}, F, opt);
}

}  // namespace illposed

namespace illposed {

bool LemmaReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const LemmaEntry& e) { return e.pass; });
}

bool LemmaReport::passed(const std::string& group) const {
  bool any = false;
  for (const auto& e : entries) {
    if (e.group != group) continue;
    any = true;
    if (!e.pass) return false;
  }
  return any;
}

void LemmaReport::write_csv(const std::filesystem::path& path) const {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path.string());
  os.precision(12);
  os << "group,name,value,threshold,kind,status\n";
  for (const auto& e : entries) {
    os << e.group << ',' << e.name << ',' << e.value << ',' << e.threshold << ',' << (e.upper ? "max" : "min")
       << ',' << (e.pass ? "pass" : "fail") << '\n';
  }
  os << "#wall_time_s," << wall_time << "\n#result," << (passed() ? "pass" : "fail") << '\n';
}

namespace {

class LemmaSink {
 public:
  LemmaSink(LemmaReport& r, std::string group) : r_(r), group_(std::move(group)) {}

  void at_most(const std::string& name, double value, double threshold) { add(name, value, threshold, true); }
  void at_least(const std::string& name, double value, double threshold) { add(name, value, threshold, false); }

 private:
  void add(const std::string& name, double value, double threshold, bool upper) {
    const bool ok = std::isfinite(value) && (upper ? value <= threshold : value >= threshold);
    r_.entries.push_back({group_, name, value, threshold, upper, ok});
  }

  LemmaReport& r_;
  std::string group_;
};

double rel_l2(const Field& a, const Field& b) { return lp_norm(a - b, 2.0) / lp_norm(b, 2.0); }

void lemmas_littlewood_paley(LemmaSink& out) {
  const CutoffProfile prof;
  {
    // Telescoping sum of the multipliers over a fine radial sweep.
    const int top = 12;
    const double r_max = 0.75 * std::ldexp(1.0, top + 1);
    double worst = 0.0;
    for (int i = 0; i <= 200000; ++i) {
      const double r = r_max * i / 200000.0;
      double sum = 0.0;
      for (int j = -1; j <= top; ++j) sum += block_multiplier(prof, j, r);
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    out.at_most("partition_of_unity", worst, 1e-12);
  }
  for (int dim : {1, 2}) {
    const Grid g = dim == 1 ? Grid(1, 4096, 16.0) : Grid(2, 512, 8.0);
    const std::string tag = dim == 1 ? "_1d" : "_2d";
    const int jm = max_resolved_shell(g);
    Field smooth = dim == 1 ? Field::sample(g, [](double x) { return std::exp(-x * x / 2) * (1 + 0.3 * std::sin(x)); })
                            : Field::sample(g, [](double x, double y) {
                                return std::exp(-(x * x + 2 * y * y) / 2) * std::cos(x - y);
                              });
    const DyadicDecomposition dec = decompose(smooth, jm);
    out.at_most("reconstruction" + tag, rel_l2(dec.sum(), smooth), 1e-10);

    // Broadband field so every shell carries energy.
    const Field broad = dim == 1 ? Field::sample(g, [](double x) { return std::exp(-8 * x * x); })
                                 : Field::sample(g, [](double x, double y) { return std::exp(-4 * (x * x + y * y)); });
    const DyadicDecomposition b = decompose(broad, jm);
    double worst = 0.0;
    for (int j = -1; j <= jm; ++j) {
      for (int k = -1; k <= jm; ++k) {
        if (std::abs(j - k) < 2) continue;
        worst = std::max(worst, dyadic_block(b.block(k), j).max_abs() / broad.max_abs());
      }
    }
    out.at_most("annihilation" + tag, worst, 1e-12);
  }
}

void lemmas_constructions(LemmaSink& out, const ScenarioConfig& cfg) {
  const Grid g(1, cfg.points_1d, cfg.half_width_1d);
  const ProfileSet prof = build_profiles(g, 1);
  DataSpec1D spec;
  spec.s = cfg.s;
  spec.j_max = std::min(cfg.j_max_1d, max_resolved_shell(g));
  spec.N0 = scan_plateau(prof.phi);
  const Field u0 = build_u0_1d(spec, prof, g);
  out.at_most("u0_origin_minus_one", std::abs(u0[static_cast<std::size_t>(g.origin_index())] - 1.0),
              spec.tail_bound() + 1e-10);

  double block = 0.0;
  for (int n = spec.j_min; n <= spec.j_max; ++n) {
    block = std::max(block, rel_l2(dyadic_block(u0, n), summand_1d(spec, prof, g, n)));
  }
  out.at_most("block_closed_form", block, 1e-9);

  double off = 0.0;
  for (int j = 3; j <= 10; ++j) {
    const Field fj = summand_1d(spec, prof, g, j);
    for (int k = 3; k <= 10; ++k) {
      if (k != j) off = std::max(off, dyadic_block(fj, k).max_abs() / fj.max_abs());
    }
  }
  out.at_most("block_selection_off_diagonal", off, 1e-12);

  const Grid g2(2, cfg.points_2d, cfg.half_width_2d);
  const ProfileSet p2 = build_profiles(g2, 2);
  DataSpec2D s2;
  s2.s = cfg.s;
  s2.j_max = cfg.j_max_2d;
  s2.M0 = scan_plateau(p2.phi1);
  const VectorField v0 = build_u0_2d(s2, p2, g2);
  out.at_most("divergence_2d", divergence(v0).max_abs(), 1e-10);
  const VectorField w0 = build_perturbation_2d(v0, 4, p2) - v0;
  out.at_most("divergence_2d_perturbation", divergence(w0).max_abs(), 1e-10);
  const int o = g2.origin_index();
  const Field phibar = stream_perturbation_2d(p2, g2);
  out.at_most("stream_perturbation_slope", std::abs(derivative(phibar, 1).at(o, o) - 1.0), 1e-9);
}

void lemmas_cosine(LemmaSink& out, const ScenarioConfig& cfg) {
  const Grid g(1, cfg.points_1d, cfg.half_width_1d);
  const ProfileSet prof = build_profiles(g, 1);
  DataSpec1D spec;
  spec.s = cfg.s;
  spec.j_max = std::min(cfg.j_max_1d, max_resolved_shell(g));
  const Field u0 = build_u0_1d(spec, prof, g);
  for (int n : {10, 11, 12}) {
    for (double p : {1.0, 2.0}) {
      out.at_least("cosine_1d_n" + std::to_string(n) + "_p" + std::to_string(static_cast<int>(p)),
                   verify_cosine_lower_bound(u0, n, p), 0.25);
    }
  }

  const Grid g2(2, cfg.points_2d, cfg.half_width_2d);
  const ProfileSet p2 = build_profiles(g2, 2);
  DataSpec2D s2;
  s2.s = cfg.s;
  s2.j_max = cfg.j_max_2d;
  const VectorField v0 = build_u0_2d(s2, p2, g2);
  const PeriodicInterpolator U(v0.c1, cfg.interp_2d);
  const int N0 = scan_plateau(p2.phi1);
  for (int n : {10, 11, 12}) {
    for (double p : {1.0, 2.0}) {
      const double floor = std::pow(2.0, -2.0 * N0 / p - 2.0);
      out.at_least("cosine_2d_n" + std::to_string(n) + "_p" + std::to_string(static_cast<int>(p)),
                   cosine_lower_bound_2d([&](double a, double b) { return U(a, b); }, n, p, N0), floor);
    }
  }
}

void lemmas_commutator(LemmaSink& out, const ScenarioConfig& cfg) {
  const Grid g(1, 1 << 14, 16.0);
  const ProfileSet prof = build_profiles(g, 1);
  DataSpec1D spec;
  spec.s = cfg.s;
  spec.j_max = 6;
  const Field f = build_u0_1d(spec, prof, g);
  const Field v = Field::sample(g, [](double x) { return std::exp(-x * x / 4) * std::cos(x); });
  const int jm = max_resolved_shell(g);

  double constant = 0.0;
  const Field c = Field::constant(g, 0.7);
  for (int k = -1; k <= jm; ++k) constant = std::max(constant, commutator(c, f, k).max_abs());
  out.at_most("constant_commutes", constant, 1e-12);

  const BesovIndex idx{cfg.s, cfg.p};
  double lhs = 0.0;
  for (int k = -1; k <= jm; ++k) lhs = std::max(lhs, std::pow(2.0, k * cfg.s) * lp_norm(commutator(v, f, k), cfg.p));
  const Field dv = derivative(v);
  const double rhs = dv.max_abs() * besov_norm(f, idx, jm) +
                     derivative(f).max_abs() * besov_norm(dv, {cfg.s - 1.0, cfg.p}, jm);
  out.at_most("commutator_constant", lhs / rhs, 100.0);
}

void lemmas_projectors(LemmaSink& out, const ScenarioConfig& cfg) {
  const Grid g(2, cfg.points_2d, cfg.half_width_2d);
  const ProfileSet prof = build_profiles(g, 2);
  DataSpec2D spec;
  spec.s = cfg.s;
  spec.j_max = cfg.j_max_2d;
  const VectorField u = build_u0_2d(spec, prof, g);
  const VectorField w = build_perturbation_2d(u, 4, prof);
  const VectorField f = advect(u, w);
  const LerayProjector P(g);
  const VectorField pf = P.project(f);
  const double scale = f.max_abs();
  out.at_most("leray_idempotent", (P.project(pf) - pf).max_abs() / scale, 1e-12);
  out.at_most("leray_sum_identity", (pf + P.complement(f) - f).max_abs() / scale, 1e-15);
  out.at_most("leray_divergence", divergence(pf).max_abs(), 1e-10);
  out.at_most("q_symmetry", (P.complement(advect(u, w)) - P.complement(advect(w, u))).max_abs(), 1e-10);
}

const std::vector<std::string>& lemma_groups() {
  static const std::vector<std::string> groups{"littlewood-paley", "constructions", "cosine", "commutator",
                                               "projectors"};
  return groups;
}

}  // namespace

LemmaReport run_lemma_group(const ScenarioConfig& cfg, const std::string& group) {
  const auto t0 = Clock::now();
  LemmaReport rep;
  LemmaSink out(rep, group);
  if (group == "littlewood-paley") {
    lemmas_littlewood_paley(out);
  } else if (group == "constructions") {
    lemmas_constructions(out, cfg);
  } else if (group == "cosine") {
    lemmas_cosine(out, cfg);
  } else if (group == "commutator") {
    lemmas_commutator(out, cfg);
  } else if (group == "projectors") {
    lemmas_projectors(out, cfg);
  } else {
    throw ConfigError("unknown lemma group '" + group + "'");
  }
  rep.wall_time = seconds_since(t0);
  return rep;
}

LemmaReport run_lemma_suite(const ScenarioConfig& cfg) {
  const auto t0 = Clock::now();
  const auto& groups = lemma_groups();
  std::vector<LemmaReport> parts(groups.size());
  parallel_for(groups.size(), cfg.jobs, [&](std::size_t i) { parts[i] = run_lemma_group(cfg, groups[i]); });
  LemmaReport rep;
  for (auto& part : parts) rep.entries.insert(rep.entries.end(), part.entries.begin(), part.entries.end());
  rep.wall_time = seconds_since(t0);
  return rep;
}

}  // namespace illposed

namespace illposed {

std::vector<GapCheck> cascade_checks(const CascadeTable& table) {
  static const double expect[4] = {2.0, 1.0, 1.0, 2.0};
  static const double tol[4] = {0.2, 0.15, 0.15, 0.2};
  std::vector<GapCheck> out;
  for (int i = 0; i < 4; ++i) {
    const double o = table.order[i];
    out.push_back({"order_ap" + std::to_string(i + 1), std::abs(o - expect[i]) <= tol[i],
                   "fitted " + num(o) + ", expected " + num(expect[i]) + " +- " + num(tol[i])});
  }
  return out;
}

}  // namespace illposed
