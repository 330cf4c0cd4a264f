#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "illposed/field.hpp"
#include "illposed/interpolation.hpp"
#include "illposed/littlewood_paley.hpp"

namespace illposed {

inline constexpr double kShockMargin = 0.1;

/// 1 + t * min(u0') over the grid.
double monotonicity_margin(const Field& u0, double t);
void require_pre_shock(const Field& u0, double t, double margin = kShockMargin);

/// eta(t, x) = x + t u0(x) and its inverse on the grid.
struct FlowMap1D {
  double t = 0.0;
  Field velocity;
  Field forward;
  Field inverse;
};

/// Inverts eta at every grid point: safeguarded Newton from x - t u0(x),
/// tolerance 1e-13, at most 50 steps, bisection on
/// [x - t |u0|_inf, x + t |u0|_inf] if Newton stalls.
FlowMap1D make_flow_map(const Field& u0, double t, double margin = kShockMargin,
                        PeriodicInterpolator::Options interp = {});

/// F in u_t + u u_x = F(u).
struct RhsHook {
  std::string name;
  std::function<Field(const Field&)> evaluate;
  double besov_bound_const = 0.0;
  double lipschitz_const = 0.0;
};

RhsHook zero_rhs();
RhsHook identity_rhs();

/// F == nullptr: u0 carried along straight characteristics (exact).
/// Otherwise the stepped pseudo-spectral solver.
Field solve_burgers(const Field& u0, double t, const RhsHook* F = nullptr);
Field solve_burgers_characteristics(const Field& u0, double t, double margin = kShockMargin,
                                    PeriodicInterpolator::Options interp = {});

/// RK4 on u_t = -(u^2/2)_x + F(u) with 2/3 dealiasing and
/// dt = cfl * h / |u|_inf; lands exactly on every requested time.
std::vector<Field> solve_burgers_stepped(const Field& u0, std::vector<double> times, const RhsHook& F,
                                         double cfl = 0.25);
Field solve_burgers_stepped(const Field& u0, double t, const RhsHook& F, double cfl = 0.25);

struct FrozenOptions {
  /// RK4 substep bound: |u0'|_inf * step <= step_bound.
  double step_bound = 0.005;
  /// Fixed substep count (0 = derived from step_bound).
  int substeps = 0;
  PeriodicInterpolator::Options interp{};
  double margin = kShockMargin;
};

/// Backward trajectories of the frozen velocity, dY/dsigma = -u0(Y),
/// Y(0) = x, integrated to sigma = t by RK4 with interpolated u0. Time
/// independent sources are integrated along the same trajectories, giving
/// the Duhamel terms int_0^t g(Y(sigma)) dsigma.
class FrozenCharacteristics1D {
 public:
  FrozenCharacteristics1D(const Field& u0, double t, std::vector<Field> sources = {},
                          FrozenOptions opt = {});

  double time() const noexcept { return t_; }
  int substeps() const noexcept { return substeps_; }
  /// Foot of the characteristic through each grid point.
  const Eigen::ArrayXd& feet() const noexcept { return feet_; }
  /// init evaluated at the feet: the solution with zero source.
  Field transport(const Field& init) const;
  const Field& integral(std::size_t k) const { return integrals_.at(k); }

 private:
  double t_;
  int substeps_;
  FrozenOptions opt_;
  Grid grid_;
  Eigen::ArrayXd feet_;
  std::vector<Field> integrals_;
};

/// Solves v_t + u0 v_x = 0, v(0) = init.
Field solve_frozen_transport(const Field& u0, const Field& init, double t, FrozenOptions opt = {});
/// Same with a time independent source g.
Field solve_frozen_transport(const Field& u0, const Field& init, const Field& source, double t,
                             FrozenOptions opt = {});
/// General source g(tau); each RK4 stage samples the source at its own time.
Field solve_frozen_transport(const Field& u0, const Field& init, const std::function<Field(double)>& source,
                             double t, FrozenOptions opt = {});

/// g(x - t u0(x)) by interpolation.
Field compose_shifted(const Field& g, const Field& u0, double t, PeriodicInterpolator::Options interp = {});
/// (Delta_n u0)(x - t u0(x)).
Field ap4_closed_form(const Field& u0, int n, double t, PeriodicInterpolator::Options interp = {});

struct CascadeRow {
  double t = 0.0;
  double err_ap1 = 0.0;  // |u - ap1|_{B^{s-1}}
  double err_ap2 = 0.0;  // |ap1 - ap2|_{B^s}
  double err_ap3 = 0.0;  // 2^{ns} |Delta_n ap2 - ap3_n|_p
  double err_ap4 = 0.0;  // 2^{ns} |ap4_n - ap3_n|_p
};

struct CascadeTable {
  int n = 0;
  BesovIndex idx;
  std::string rhs;
  std::vector<CascadeRow> rows;
  double order[4] = {0, 0, 0, 0};

  void write_csv(const std::filesystem::path& path) const;
};

struct CascadeOptions {
  /// Highest shell in the Besov sums; -1 = highest resolved shell.
  int norm_j_max = -1;
  FrozenOptions frozen{};
};

CascadeTable cascade_errors(const Field& u0, int n, std::vector<double> times, const BesovIndex& idx,
                            const RhsHook& F, CascadeOptions opt = {});

/// |cos(lambda_n (x - t_n u0(x)))|_{L^p([0, 2 pi])}, sampled at
/// samples_per_wave points per carrier wavelength.
double verify_cosine_lower_bound(const Field& u0, int n, double p, int samples_per_wave = 32);

/// |cos(lambda_n (x1 - t_n f(x)))|_{L^p([0, 2 pi 2^-N0]^2)} by a midpoint
/// rule with samples_per_wave points per carrier wavelength along x1 and
/// samples_x2 points along x2.
double cosine_lower_bound_2d(const std::function<double(double, double)>& f, int n, double p, int N0,
                             int samples_per_wave = 32, int samples_x2 = 64);

}  // namespace illposed
