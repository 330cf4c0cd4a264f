#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "illposed/interpolation.hpp"
#include "illposed/littlewood_paley.hpp"
#include "illposed/transport1d.hpp"
#include "illposed/vector_field.hpp"

namespace illposed {

Field divergence(const VectorField& u);
/// d1 u2 - d2 u1.
Field curl(const VectorField& u);
/// Throws NonDivergenceFree when max |div u| exceeds tol.
void require_divergence_free(const VectorField& u, double tol = 1e-10);

/// P = Id - xi xi^T / |xi|^2 per mode, identity on the zero mode. Nyquist
/// components of xi are dropped, matching derivative().
class LerayProjector {
 public:
  explicit LerayProjector(const Grid& grid);

  VectorField project(const VectorField& f) const;
  /// Q f = f - P f, so P + Q is the identity.
  VectorField complement(const VectorField& f) const;

 private:
  Grid grid_;
  Eigen::ArrayXd a11_, a12_, a22_;  // entries of xi xi^T / |xi|^2
};

VectorField leray_project(const VectorField& f);
VectorField leray_complement(const VectorField& f);

/// (u . grad) v with dealiased products.
VectorField advect(const VectorField& u, const VectorField& v);

/// Divergence-free velocity with curl omega plus a constant mean flow.
VectorField velocity_from_vorticity(const Field& omega, double mean1 = 0.0, double mean2 = 0.0);

struct EulerState {
  double time = 0.0;
  Field vorticity;
  VectorField velocity;
};

struct EulerOptions {
  double cfl = 0.25;
  /// Fixed step; unset means cfl * h / |u|_inf every step.
  std::optional<double> dt;
};

/// Vorticity form, 2/3 dealiasing, RK4. Returns u0 itself at t = 0.
VectorField solve_euler(const VectorField& u0, double t, std::optional<double> dt = std::nullopt);
/// One integration through the sorted times; states come back in input order.
std::vector<EulerState> solve_euler_snapshots(const VectorField& u0, std::vector<double> times,
                                              EulerOptions opt = {});

/// (1/2) int |u|^2 over the box.
double kinetic_energy(const VectorField& u);
/// (1/2) int omega^2 over the box.
double enstrophy(const Field& omega);

/// min over the grid of det(I + t grad u0).
double jacobian_margin(const VectorField& u0, double t);

inline PeriodicInterpolator::Options default_interp_2d() { return {4, 8}; }

struct FrozenOptions2D {
  double step_bound = 0.02;
  int substeps = 0;
  PeriodicInterpolator::Options interp = default_interp_2d();
  double margin = kShockMargin;
};

/// 2D counterpart of FrozenCharacteristics1D: dY/dsigma = -u0(Y).
class FrozenCharacteristics2D {
 public:
  FrozenCharacteristics2D(const VectorField& u0, double t, std::vector<VectorField> sources = {},
                          FrozenOptions2D opt = {});

  int substeps() const noexcept { return substeps_; }
  const Eigen::ArrayXd& feet1() const noexcept { return y1_; }
  const Eigen::ArrayXd& feet2() const noexcept { return y2_; }
  Field transport(const Field& init) const;
  VectorField transport(const VectorField& init) const;
  const VectorField& integral(std::size_t k) const { return integrals_.at(k); }

 private:
  double t_;
  int substeps_;
  FrozenOptions2D opt_;
  Grid grid_;
  Eigen::ArrayXd y1_, y2_;
  std::vector<VectorField> integrals_;
};

/// g(x - t u0(x)) componentwise.
VectorField compose_shifted(const VectorField& g, const VectorField& u0, double t,
                            PeriodicInterpolator::Options interp = default_interp_2d());
Field compose_shifted(const Field& g, const VectorField& u0, double t,
                      PeriodicInterpolator::Options interp = default_interp_2d());

struct EulerCascadeOptions {
  int norm_j_max = -1;
  FrozenOptions2D frozen{};
  EulerOptions euler{};
};

/// Same columns as the 1D cascade; the ap1 source is Q(u0 . grad u0).
CascadeTable euler_cascade(const VectorField& u0, int n, std::vector<double> times, const BesovIndex& idx,
                           EulerCascadeOptions opt = {});

/// ((Delta_n u0)(x - t u0), (Delta_n u0n)(x - t u0n)).
std::pair<VectorField, VectorField> ap4_pair(const VectorField& u0, const VectorField& u0n, int n, double t,
                                             PeriodicInterpolator::Options interp = default_interp_2d());

}  // namespace illposed
