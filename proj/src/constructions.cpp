#include "illposed/constructions.hpp"

#include <cmath>
#include <cstdint>

#include "illposed/errors.hpp"
#include "illposed/littlewood_paley.hpp"
#include "illposed/spectral.hpp"

namespace illposed {

namespace {

void require_lattice_carrier(const Grid& grid, int j) {
  const double k = carrier(j) * grid.half_width();
  if (std::abs(k - std::round(k)) > 1e-9) {
    throw ConfigError("carrier 11/8*2^" + std::to_string(j) +
                      " is not a lattice frequency of the box; use an integer half width");
  }
}

// cos or sin of lambda_j x on the grid nodes with the phase reduced in
// integers, since lambda_j x_i = 2 pi K i / N - K pi with K = lambda_j L.
Eigen::ArrayXd lattice_wave(const Grid& axis, int j, bool use_sin) {
  const auto K = static_cast<std::int64_t>(std::llround(carrier(j) * axis.half_width()));
  const std::int64_t n = axis.points();
  const double sign = (K % 2 == 0) ? 1.0 : -1.0;
  Eigen::ArrayXd v(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const double angle = 2.0 * kPi * static_cast<double>((K * i) % n) / static_cast<double>(n);
    v[i] = sign * (use_sin ? std::sin(angle) : std::cos(angle));
  }
  return v;
}

double origin_value(const Field& axis_field) {
  return axis_field[static_cast<std::size_t>(axis_field.grid().origin_index())];
}

}  // namespace

Field centred_profile(const Grid& axis, const RadialBump<double>& bump) {
  const int n = axis.points();
  const double scale = n / (2.0 * kPi * axis.half_width());
  Spectrum c(n / 2 + 1);
  for (int k = 0; k <= n / 2; ++k) {
    c[k] = bump(axis.frequency(k)) * scale * (k % 2 ? -1.0 : 1.0);
  }
  // The Nyquist coefficient of a bump supported below Nyquist is zero anyway.
  return Field::from_spectrum(axis, c);
}

ProfileSet build_profiles(const Grid& grid, int d) {
  ProfileSet p;
  p.d = d;
  p.axis = grid.axis();
  if (p.axis.nyquist() <= 0.75) throw ConfigError("grid does not resolve the envelope profiles");
  p.phi_hat = {-1.0, 0.0, 0.25, 0.5};
  p.psi_hat = {3.0 / 8.0, 0.5, 5.0 / 8.0, 0.75};
  p.phi1_hat = {-1.0, 0.0, std::pow(4.0, -d), std::pow(2.0, -d)};
  p.psi1_hat = p.psi_hat.scaled(1.0 / std::sqrt(static_cast<double>(d)));
  p.phi = centred_profile(p.axis, p.phi_hat);
  p.psi = centred_profile(p.axis, p.psi_hat);
  p.phi1 = centred_profile(p.axis, p.phi1_hat);
  p.psi1 = centred_profile(p.axis, p.psi1_hat);
  p.phi0 = origin_value(p.phi);
  p.psi0 = origin_value(p.psi);
  p.phi10 = origin_value(p.phi1);
  p.psi10 = origin_value(p.psi1);
  if (!(p.phi0 > 0 && p.psi0 > 0 && p.phi10 > 0 && p.psi10 > 0)) {
    throw ConfigError("envelope profiles degenerate on this box (too few lattice modes)");
  }
  return p;
}

int scan_plateau(const Field& f) {
  const Grid& g = f.grid();
  const int o = g.origin_index();
  const double f0 = f[static_cast<std::size_t>(o)];
  for (int N = 0; N < 40; ++N) {
    const double right = 2.0 * kPi * std::ldexp(1.0, -N);
    bool ok = true;
    for (int i = o; i < g.points() && g.coordinate(i) <= right + 1e-12; ++i) {
      if (f[static_cast<std::size_t>(i)] < 0.5 * f0) {
        ok = false;
        break;
      }
    }
    if (ok) return N;
  }
  throw ConfigError("no plateau scale found");
}

double DataSpec1D::gamma() const { return std::pow(2.0, 2 * s) * (std::pow(2.0, s) - 1.0); }

double DataSpec1D::tail_bound() const {
  return gamma() * std::pow(2.0, -(j_max + 1) * s) / (1.0 - std::pow(2.0, -s));
}

TimeSequence time_sequence(int n) {
  if (n < 1) throw ConfigError("time sequence index must be >= 1");
  return {n, carrier(n), 8.0 / 11.0 * kPi * n * std::ldexp(1.0, -n)};
}

Field summand_1d(const DataSpec1D& spec, const ProfileSet& prof, const Grid& grid, int j) {
  if (grid.dim() != 1) throw GridMismatch("1D data needs a 1D grid");
  require_resolved(grid, j);
  require_lattice_carrier(grid, j);
  const double c = std::pow(2.0, -j * spec.s) * spec.gamma() / prof.phi0;
  Eigen::ArrayXd v = c * prof.phi.samples() * lattice_wave(grid, j, false);
  return Field(grid, std::move(v));
}

Field build_u0_1d(const DataSpec1D& spec, const ProfileSet& prof, const Grid& grid) {
  require_resolved(grid, spec.j_max);
  Field u(grid);
  for (int j = spec.j_min; j <= spec.j_max; ++j) u += summand_1d(spec, prof, grid, j);
  return u;
}

Field perturbation_profile_1d(const ProfileSet& prof, const Grid& grid) {
  if (!(grid == prof.axis)) throw GridMismatch("profiles were built on another grid");
  return prof.psi * (1.0 / prof.psi0);
}

Field build_perturbation_1d(const Field& u0, int n, const ProfileSet& prof) {
  if (n < 1) throw ConfigError("perturbation index must be >= 1");
  return u0 + perturbation_profile_1d(prof, u0.grid()) * (1.0 / n);
}

Field build_perturbation_1d(const DataSpec1D& spec, int n, const ProfileSet& prof, const Grid& grid) {
  return build_perturbation_1d(build_u0_1d(spec, prof, grid), n, prof);
}

VectorField perp_gradient(const Field& stream) {
  return {derivative(stream, 1), -derivative(stream, 0), true};
}

Field tensor(const Field& a, const Field& b) {
  const Grid& ax = a.grid();
  require_same_grid(a, b);
  Grid g(2, ax.points(), ax.half_width());
  const int n = ax.points();
  Eigen::ArrayXd v(static_cast<Eigen::Index>(g.size()));
  for (int i = 0; i < n; ++i) {
    v.segment(static_cast<Eigen::Index>(i) * n, n) = a[static_cast<std::size_t>(i)] * b.samples();
  }
  return Field(g, std::move(v));
}

namespace {

Field phibar(const ProfileSet& prof) { return prof.phi1 * (1.0 / prof.phi10); }

Field carrier_field(const Grid& axis, int j, bool use_sin) {
  require_lattice_carrier(axis, j);
  return Field(axis, lattice_wave(axis, j, use_sin));
}

void check_2d(const ProfileSet& prof, const Grid& grid, int j) {
  if (grid.dim() != 2) throw GridMismatch("2D data needs a 2D grid");
  if (!(grid.axis() == prof.axis)) throw GridMismatch("profiles were built on another grid");
  require_resolved(grid, j);
  require_lattice_carrier(grid, j);
}

}  // namespace

Field stream_summand_2d(const ProfileSet& prof, const Grid& grid, int j) {
  check_2d(prof, grid, j);
  const Field pb = phibar(prof);
  return tensor(carrier_field(prof.axis, j, true) * pb * (8.0 / 11.0), pb);
}

VectorField summand_2d(const DataSpec2D& spec, const ProfileSet& prof, const Grid& grid, int j) {
  return perp_gradient(stream_summand_2d(prof, grid, j) * std::pow(2.0, -j * (spec.s + 1.0)));
}

VectorField build_u0_2d(const DataSpec2D& spec, const ProfileSet& prof, const Grid& grid) {
  check_2d(prof, grid, spec.j_max);
  Field F(grid);
  for (int j = spec.j_min; j <= spec.j_max; ++j) {
    F += stream_summand_2d(prof, grid, j) * std::pow(2.0, -j * (spec.s + 1.0));
  }
  return perp_gradient(F);
}

Field stream_perturbation_2d(const ProfileSet& prof, const Grid& grid) {
  if (grid.dim() != 2 || !(grid.axis() == prof.axis)) throw GridMismatch("profiles were built on another grid");
  const Field anti = antiderivative(prof.psi1, 0);
  return tensor(prof.psi1, anti) * (1.0 / (prof.psi10 * prof.psi10));
}

VectorField build_perturbation_2d(const VectorField& u0, int n, const ProfileSet& prof) {
  if (n < 1) throw ConfigError("perturbation index must be >= 1");
  return u0 - (1.0 / n) * perp_gradient(stream_perturbation_2d(prof, u0.grid()));
}

VectorField build_perturbation_2d(const DataSpec2D& spec, int n, const ProfileSet& prof, const Grid& grid) {
  return build_perturbation_2d(build_u0_2d(spec, prof, grid), n, prof);
}

namespace {

Field appendix_stream(const ProfileSet& prof, const Grid& grid, int j) {
  check_2d(prof, grid, j);
  const Field anti = antiderivative(prof.psi1, 0) * (1.0 / prof.psi10);
  return tensor(carrier_field(prof.axis, j, false) * phibar(prof), anti);
}

double appendix_gamma(double s) { return std::pow(2.0, 2 * s + 3) * (std::pow(2.0, s) - 1.0); }

}  // namespace

VectorField appendix_summand(double s, const ProfileSet& prof, const Grid& grid, int j) {
  return perp_gradient(appendix_stream(prof, grid, j) * (appendix_gamma(s) * std::pow(2.0, -j * (s + 1.0))));
}

VectorField build_appendix_u0(double s, const ProfileSet& prof, const Grid& grid, int j_max, int j_min) {
  check_2d(prof, grid, j_max);
  Field F(grid);
  for (int j = j_min; j <= j_max; ++j) F += appendix_stream(prof, grid, j) * std::pow(2.0, -j * (s + 1.0));
  return perp_gradient(F * appendix_gamma(s));
}

}  // namespace illposed
