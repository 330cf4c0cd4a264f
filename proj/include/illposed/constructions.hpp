#pragma once

#include "illposed/cutoff.hpp"
#include "illposed/field.hpp"
#include "illposed/vector_field.hpp"

namespace illposed {

/// Envelope profiles on one axis, realized by inverse DFT of the radial bumps
/// (centred at the origin). Only ratios such as phi / phi(0) are used later,
/// so the absolute Fourier normalization does not matter.
struct ProfileSet {
  int d = 1;
  Grid axis{1, 16};
  RadialBump<double> phi_hat;
  RadialBump<double> psi_hat;
  RadialBump<double> phi1_hat;
  RadialBump<double> psi1_hat;
  Field phi{axis};
  Field psi{axis};
  Field phi1{axis};
  Field psi1{axis};
  double phi0 = 0.0;
  double psi0 = 0.0;
  double phi10 = 0.0;
  double psi10 = 0.0;
};

/// Profiles sampled on grid.axis(). d sets the phi1 / psi1 scalings.
ProfileSet build_profiles(const Grid& grid, int d = 1);

/// Field on the axis whose DFT is bump(xi) (times the phase that centres it).
Field centred_profile(const Grid& axis, const RadialBump<double>& bump);

/// Smallest N >= 0 with f(x) >= f(0)/2 on every sample of [0, 2 pi 2^-N].
int scan_plateau(const Field& f);

struct DataSpec1D {
  double s = 2.0;
  int j_min = 3;
  int j_max = 13;
  int N0 = 0;

  double gamma() const;
  /// gamma 2^{-(j_max+1)s} / (1 - 2^{-s}): size of the dropped tail at 0.
  double tail_bound() const;
};

struct DataSpec2D {
  double s = 2.5;
  int j_min = 3;
  int j_max = 4;
  int M0 = 0;
};

struct TimeSequence {
  int n = 0;
  double lambda_n = 0.0;
  double t_n = 0.0;
};

TimeSequence time_sequence(int n);

/// lambda_j = 11/8 2^j.
inline double carrier(int j) { return 11.0 / 8.0 * std::ldexp(1.0, j); }

// 1D data: sum_j 2^{-js} gamma phi/phi(0) cos(lambda_j x).
Field summand_1d(const DataSpec1D& spec, const ProfileSet& prof, const Grid& grid, int j);
Field build_u0_1d(const DataSpec1D& spec, const ProfileSet& prof, const Grid& grid);
/// psi / psi(0).
Field perturbation_profile_1d(const ProfileSet& prof, const Grid& grid);
Field build_perturbation_1d(const DataSpec1D& spec, int n, const ProfileSet& prof, const Grid& grid);
Field build_perturbation_1d(const Field& u0, int n, const ProfileSet& prof);

/// (d_2 F, -d_1 F) computed spectrally.
VectorField perp_gradient(const Field& stream);

/// Tensor product a(x1) b(x2) of two axis fields.
Field tensor(const Field& a, const Field& b);

// 2D data: sum_j 2^{-j(s+1)} perp-grad f_j, f_j = 8/11 sin(lambda_j x1) phibar(x1) phibar(x2).
Field stream_summand_2d(const ProfileSet& prof, const Grid& grid, int j);
VectorField summand_2d(const DataSpec2D& spec, const ProfileSet& prof, const Grid& grid, int j);
VectorField build_u0_2d(const DataSpec2D& spec, const ProfileSet& prof, const Grid& grid);
/// Phibar = psi1(0)^-2 (d^-1 psi1)(x2) psi1(x1).
Field stream_perturbation_2d(const ProfileSet& prof, const Grid& grid);
VectorField build_perturbation_2d(const DataSpec2D& spec, int n, const ProfileSet& prof, const Grid& grid);
VectorField build_perturbation_2d(const VectorField& u0, int n, const ProfileSet& prof);

/// Single-datum field for the time-zero experiment.
VectorField build_appendix_u0(double s, const ProfileSet& prof, const Grid& grid, int j_max, int j_min = 3);
VectorField appendix_summand(double s, const ProfileSet& prof, const Grid& grid, int j);

}  // namespace illposed
