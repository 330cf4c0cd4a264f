#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "illposed/constructions.hpp"
#include "illposed/errors.hpp"
#include "illposed/euler2d.hpp"
#include "illposed/littlewood_paley.hpp"
#include "illposed/spectral.hpp"

using namespace illposed;

namespace {

double rel_l2(const Field& a, const Field& b) { return lp_norm(a - b, 2.0) / lp_norm(b, 2.0); }

struct Data1D {
  Grid g{1, 1 << 16, 16.0};
  ProfileSet prof = build_profiles(g, 1);
  DataSpec1D spec = [] {
    DataSpec1D s;
    s.j_max = 9;
    return s;
  }();
  Field u0 = build_u0_1d(spec, prof, g);
};

const Data1D& data1d() {
  static const Data1D d;
  return d;
}

struct Data2D {
  Grid g{2, 512, 8.0};
  ProfileSet prof = build_profiles(g, 2);
  DataSpec2D spec = [] {
    DataSpec2D s;
    s.j_max = 3;
    return s;
  }();
  VectorField u0 = build_u0_2d(spec, prof, g);
};

const Data2D& data2d() {
  static const Data2D d;
  return d;
}

}  // namespace

TEST_CASE("profile bumps") {
  const auto& p = data1d().prof;
  CHECK(p.phi_hat(0.2) == 1.0);
  CHECK(p.phi_hat(0.5) == 0.0);
  CHECK(p.psi_hat(0.6) == 1.0);
  CHECK(p.psi_hat(0.3) == 0.0);
  CHECK(p.phi0 > 0.0);
  CHECK(p.psi0 > 0.0);
  // Profiles are even and peak at the origin.
  const Field& phi = p.phi;
  const auto o = static_cast<std::size_t>(phi.grid().origin_index());
  CHECK(std::abs(phi[o + 7] - phi[o - 7]) <= 1e-14 * p.phi0);
  CHECK(phi.max_abs() == doctest::Approx(p.phi0));
}

TEST_CASE("gamma and tail") {
  DataSpec1D s;
  CHECK(s.gamma() == 48.0);
  s.s = 1.5;
  CHECK(s.gamma() > 1.0);
  s.s = 2.0;
  s.j_max = 9;
  CHECK(s.tail_bound() == doctest::Approx(48.0 * std::pow(2.0, -20) / 0.75));
}

TEST_CASE("time sequence") {
  const TimeSequence t = time_sequence(10);
  CHECK(t.lambda_n == 1408.0);
  CHECK(t.t_n == doctest::Approx(8.0 / 11.0 * kPi * 10 / 1024).epsilon(1e-15));
  CHECK(t.t_n == doctest::Approx(0.022320).epsilon(1e-4));
  for (int n = 1; n <= 30; ++n) {
    const auto a = time_sequence(n);
    CHECK(std::abs(a.lambda_n * a.t_n / (n * kPi) - 1.0) <= 1e-13);
    if (n >= 2) CHECK(time_sequence(n + 1).t_n < a.t_n);
  }
  CHECK_THROWS_AS(time_sequence(0), ConfigError);
}

TEST_CASE("1D datum normalization and plateau") {
  const auto& d = data1d();
  const auto o = static_cast<std::size_t>(d.g.origin_index());
  CHECK(std::abs(d.u0[o] - 1.0) <= d.spec.tail_bound() + 1e-10);
  CHECK(d.u0.max_abs() <= 1.0 + 1e-12);

  const int N0 = scan_plateau(d.prof.phi);
  CHECK(N0 >= 0);
  const Field& phi = d.prof.phi;
  const double edge = 2 * kPi * std::ldexp(1.0, -N0);
  for (int i = d.g.origin_index(); d.g.coordinate(i) <= edge; ++i) {
    CHECK(phi[static_cast<std::size_t>(i)] >= 0.5 * d.prof.phi0);
  }
}

TEST_CASE("1D blocks match the closed form") {
  const auto& d = data1d();
  for (int n = d.spec.j_min; n <= d.spec.j_max; ++n) {
    CHECK(rel_l2(dyadic_block(d.u0, n), summand_1d(d.spec, d.prof, d.g, n)) <= 1e-9);
  }
  // Shells below the first summand are empty.
  CHECK(dyadic_block(d.u0, 1).max_abs() <= 1e-12);
  for (int j = 3; j <= 9; ++j) {
    const Field fj = summand_1d(d.spec, d.prof, d.g, j);
    for (int k = 3; k <= 9; ++k) {
      if (k != j) CHECK(dyadic_block(fj, k).max_abs() <= 1e-12 * fj.max_abs());
    }
  }
}

TEST_CASE("1D perturbation") {
  const auto& d = data1d();
  const Field phi = perturbation_profile_1d(d.prof, d.g);
  CHECK(std::abs(phi[static_cast<std::size_t>(d.g.origin_index())] - 1.0) <= 1e-10);
  const BesovIndex idx{2.0, 2.0};
  const double a = besov_norm(build_perturbation_1d(d.u0, 6, d.prof) - d.u0, idx);
  const double b = besov_norm(build_perturbation_1d(d.u0, 12, d.prof) - d.u0, idx);
  CHECK(a / b == doctest::Approx(2.0).epsilon(0.005));
  CHECK(a * 6 == doctest::Approx(besov_norm(phi, idx)).epsilon(1e-12));
}

TEST_CASE("off-lattice carriers are rejected") {
  const Grid g(1, 1 << 12, 16.3);
  const ProfileSet prof = build_profiles(g, 1);
  CHECK_THROWS_AS(summand_1d(DataSpec1D{}, prof, g, 3), ConfigError);
}

TEST_CASE("2D datum") {
  const auto& d = data2d();
  CHECK(divergence(d.u0).max_abs() <= 1e-10);
  const int o = d.g.origin_index();
  CHECK(std::abs(d.u0.c1.at(o, o)) <= 1e-10);
  for (int n = d.spec.j_min; n <= d.spec.j_max; ++n) {
    const VectorField want = summand_2d(d.spec, d.prof, d.g, n);
    const VectorField got = dyadic_block(d.u0, n);
    CHECK(lp_norm(got - want, 2.0) / lp_norm(want, 2.0) <= 1e-9);
  }
}

TEST_CASE("2D perturbation") {
  const auto& d = data2d();
  const Field bar = stream_perturbation_2d(d.prof, d.g);
  const int o = d.g.origin_index();
  CHECK(std::abs(derivative(bar, 1).at(o, o) - 1.0) <= 1e-9);
  for (int n : {3, 5}) {
    const VectorField un = build_perturbation_2d(d.u0, n, d.prof);
    CHECK(divergence(un).max_abs() <= 1e-10);
    // The perturbation never touches the data shells.
    for (int j = d.spec.j_min; j <= d.spec.j_max; ++j) CHECK(dyadic_block(un - d.u0, j).max_abs() <= 1e-12);
  }
  const BesovIndex idx{2.5, 2.0};
  const double a = besov_norm(build_perturbation_2d(d.u0, 3, d.prof) - d.u0, idx);
  const double b = besov_norm(build_perturbation_2d(d.u0, 6, d.prof) - d.u0, idx);
  CHECK(a / b == doctest::Approx(2.0).epsilon(0.005));
}

TEST_CASE("2D plateau of phibar") {
  const auto& d = data2d();
  const int M0 = scan_plateau(d.prof.phi1);
  const double edge = 2 * kPi * std::ldexp(1.0, -M0);
  const Field& p = d.prof.phi1;
  for (int i = p.grid().origin_index(); p.grid().coordinate(i) <= edge; ++i) {
    CHECK(p[static_cast<std::size_t>(i)] >= 0.5 * d.prof.phi10);
  }
}

TEST_CASE("appendix datum") {
  const auto& d = data2d();
  const VectorField a = build_appendix_u0(2.5, d.prof, d.g, 3);
  CHECK(divergence(a).max_abs() <= 1e-10);
  CHECK(lp_norm(a, 2.0) > 0.0);
  CHECK(lp_norm(dyadic_block(a, 3) - appendix_summand(2.5, d.prof, d.g, 3), 2.0) <= 1e-9 * lp_norm(a, 2.0));
}
