#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <vector>

#include "illposed/constructions.hpp"
#include "illposed/errors.hpp"
#include "illposed/field_io.hpp"
#include "illposed/fft.hpp"
#include "illposed/interpolation.hpp"
#include "illposed/littlewood_paley.hpp"
#include "illposed/spectral.hpp"
#include "oracle.hpp"

using namespace illposed;

namespace {

std::vector<double> to_vec(const Field& f) { return {f.samples().begin(), f.samples().end()}; }

double rel_l2(const Field& a, const Field& b) { return lp_norm(a - b, 2.0) / lp_norm(b, 2.0); }

}  // namespace

TEST_CASE("grid geometry") {
  const Grid g(1, 64, 16.0);
  CHECK(g.spacing() == doctest::Approx(32.0 * kPi / 64));
  CHECK(g.coordinate(g.origin_index()) == 0.0);
  CHECK(g.nyquist() == doctest::Approx(2.0));
  CHECK_THROWS_AS(Grid(1, 48, 16.0), ConfigError);
  CHECK_THROWS_AS(Grid(3, 64, 16.0), ConfigError);
  CHECK(Grid(2, 32, 8.0).size() == 1024);
}

TEST_CASE("dft round trip") {
  for (int dim : {1, 2}) {
    const Grid g(dim, dim == 1 ? 512 : 64, 4.0);
    Eigen::ArrayXd v(g.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = std::sin(0.37 * i) + std::cos(1.3 * i * i);
    const Field f(g, v);
    const Field back = Field::from_spectrum(g, f.spectrum());
    CHECK((back.samples() - v).abs().maxCoeff() / v.abs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("cutoff values") {
  const CutoffProfile c;
  CHECK(c.low(0.5) == 1.0);
  CHECK(c.shell(1.4) == 1.0);
  CHECK(c.low(4.0 / 3.0) == 0.0);
  double sum = c.low(100.0);
  for (int j = 0; j <= 20; ++j) sum += c.shell(100.0 / std::ldexp(1.0, j));
  CHECK(std::abs(sum - 1.0) <= 1e-12);
}

TEST_CASE("partition of unity on every grid frequency") {
  const Grid g(1, 1024, 16.0);
  const int jm = max_resolved_shell(g);
  const CutoffProfile c;
  double worst = 0.0;
  for (int k = 0; k <= 512; ++k) {
    const double r = g.frequency(k);
    if (r > 0.75 * std::ldexp(1.0, jm + 1)) break;
    double s = 0.0;
    for (int j = -1; j <= jm; ++j) s += block_multiplier(c, j, r);
    worst = std::max(worst, std::abs(s - 1.0));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("blocks agree with the naive-DFT oracle") {
  const Grid g(1, 256, 4.0);
  const Field u = Field::sample(g, [](double x) { return std::exp(-x * x) * (1 + std::sin(3 * x)); });
  const auto raw = to_vec(u);
  for (int j = -1; j <= max_resolved_shell(g); ++j) {
    const auto want = oracle::block(raw, 4.0, j);
    const auto got = to_vec(dyadic_block(u, j));
    double err = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) err = std::max(err, std::abs(want[i] - got[i]));
    CHECK(err <= 1e-12);
  }
}

TEST_CASE("single carrier selects one shell") {
  const Grid g(1, 1 << 16, 16.0);
  const Field c = Field::sample(g, [](double x) { return std::cos(1.375 * 128 * x); });
  CHECK(rel_l2(dyadic_block(c, 7), c) <= 1e-10);
  CHECK(dyadic_block(c, 9).max_abs() <= 1e-12);
  CHECK(dyadic_block(Field(g), 5).max_abs() == 0.0);
}

TEST_CASE("unresolved shells throw") {
  const Grid g(1, 1024, 16.0);
  CHECK(max_resolved_shell(g) == 3);
  CHECK_THROWS_AS(dyadic_block(Field(g), 4), UnresolvedShell);
}

TEST_CASE("reconstruction and almost orthogonality") {
  const Grid g(2, 256, 8.0);
  const Field u = Field::sample(g, [](double x, double y) { return std::exp(-(x * x + y * y) / 8) * std::cos(x + 2 * y); });
  const int jm = max_resolved_shell(g);
  const auto dec = decompose(u, jm);
  CHECK(rel_l2(dec.sum(), u) <= 1e-10);
  for (int j = -1; j <= jm; ++j) {
    for (int k = j + 2; k <= jm; ++k) CHECK(dyadic_block(dec.block(k), j).max_abs() <= 1e-12);
  }
}

TEST_CASE("block spectrum lives on its annulus") {
  const Grid g(1, 4096, 16.0);
  const Field u = Field::sample(g, [](double x) { return std::exp(-4 * x * x); });
  const int j = 4;
  const Field b = dyadic_block(u, j);
  const auto& spec = b.spectrum();
  double outside = 0.0;
  for (int k = 0; k <= g.points() / 2; ++k) {
    const double r = g.frequency(k);
    if (r < 0.75 * 16 || r > 8.0 / 3.0 * 16) outside = std::max(outside, std::abs(spec[k]) / g.points());
  }
  CHECK(outside <= 1e-14);
}

TEST_CASE("lp norms") {
  const Grid g(1, 1024, 16.0);
  CHECK(lp_norm(Field::constant(g, 1.0), kInf) == 1.0);
  CHECK(lp_norm(Field(g), 1.0) == 0.0);
  const Field c = Field::sample(g, [](double x) { return std::cos(x); });
  CHECK(lp_norm(c, 2.0) == doctest::Approx(std::sqrt(16 * kPi)).epsilon(1e-12));
  const auto raw = to_vec(c);
  CHECK(lp_norm(c, 3.0) == doctest::Approx(oracle::lp(raw, g.spacing(), 3.0)).epsilon(1e-12));
}

TEST_CASE("lp norm is stable under refinement of a band-limited field") {
  const Grid g(1, 512, 16.0);
  const Field u = Field::sample(g, [](double x) { return std::exp(-x * x / 8) * std::cos(2 * x); });
  const Field fine = upsample(u, 2);
  CHECK(std::abs(lp_norm(fine, 2.0) / lp_norm(u, 2.0) - 1.0) <= 1e-10);
}

TEST_CASE("besov norms") {
  // L = 20 puts the carrier 1.4 * 2^6 on the frequency lattice; only shell 6 fires.
  const Grid g(1, 1 << 14, 20.0);
  CHECK(besov_norm(Field(g), {2.0, 2.0}) == 0.0);

  const Field c = Field::sample(g, [](double x) { return std::cos(1.4 * 64 * x); });
  const BesovIndex idx{1.5, 2.0};
  const auto prof = besov_profile(c, idx, max_resolved_shell(g));
  double brute = 0.0;
  for (double v : prof) brute = std::max(brute, v);
  CHECK(besov_norm(c, idx) == doctest::Approx(brute).epsilon(1e-14));
  CHECK(besov_norm(c, idx) == doctest::Approx(std::pow(2.0, 6 * 1.5) * lp_norm(c, 2.0)).epsilon(1e-10));
}

TEST_CASE("besov norm of the 1D datum with p = inf is gamma") {
  const Grid g(1, 1 << 17, 16.0);
  const ProfileSet prof = build_profiles(g, 1);
  DataSpec1D spec;
  spec.j_max = 9;
  const Field u0 = build_u0_1d(spec, prof, g);
  CHECK(spec.gamma() == 48.0);
  CHECK(besov_norm(u0, {2.0, kInf}, 10) == doctest::Approx(48.0).epsilon(1e-9));
}

TEST_CASE("derivatives and antiderivatives") {
  const Grid g(1, 256, 4.0);
  const Field s = Field::sample(g, [](double x) { return std::sin(x / 2); });
  const Field c = Field::sample(g, [](double x) { return 0.5 * std::cos(x / 2); });
  CHECK((derivative(s) - c).max_abs() <= 1e-12);
  CHECK((antiderivative(c) - s).max_abs() <= 1e-12);
}

TEST_CASE("commutator of a constant vanishes") {
  const Grid g(1, 2048, 16.0);
  const Field f = Field::sample(g, [](double x) { return std::exp(-x * x) * std::sin(5 * x); });
  const Field v = Field::constant(g, -1.7);
  for (int k = -1; k <= max_resolved_shell(g); ++k) CHECK(commutator(v, f, k).max_abs() <= 1e-12);
}

TEST_CASE("field binary round trip") {
  const Grid g(2, 32, 3.0);
  const Field u = Field::sample(g, [](double x, double y) { return x - 2 * y; });
  const auto path = std::filesystem::temp_directory_path() / "illposed_field_roundtrip.bin";
  write_field(u, path);
  const Field back = read_field(path);
  CHECK(back.grid() == g);
  CHECK((back.samples() == u.samples()).all());
  std::filesystem::remove(path);
  CHECK_THROWS(read_field(path));
}

TEST_CASE("band-limited interpolation") {
  const Grid g(1, 512, 16.0);
  const auto f = [](double x) { return std::exp(-x * x / 16) * std::cos(1.3 * x); };
  const PeriodicInterpolator I(Field::sample(g, f));
  double err = 0.0;
  for (double x = -20.0; x < 20.0; x += 0.0173) err = std::max(err, std::abs(I(x) - f(x)));
  CHECK(err <= 1e-10);

  const Grid g2(2, 128, 4.0);
  const auto h = [](double x, double y) { return std::exp(-(x * x + y * y) / 4) * std::sin(x - y); };
  const PeriodicInterpolator J(Field::sample(g2, h), {4, 8});
  double err2 = 0.0;
  for (double x = -3.0; x < 3.0; x += 0.37) {
    for (double y = -3.0; y < 3.0; y += 0.41) err2 = std::max(err2, std::abs(J(x, y) - h(x, y)));
  }
  CHECK(err2 <= 1e-8);
}
