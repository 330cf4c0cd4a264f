#include "illposed/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>

#include "illposed/errors.hpp"
#include "illposed/spectral.hpp"

namespace illposed {

int max_resolved_shell(const Grid& grid) {
  int j = -1;
  while (shell_outer_radius(j + 1) <= grid.nyquist()) ++j;
  return j;
}

void require_resolved(const Grid& grid, int j) {
  const double outer = shell_outer_radius(j);
  if (outer > grid.nyquist()) throw UnresolvedShell(j, outer, grid.nyquist());
}

double block_multiplier(const CutoffProfile& profile, int j, double r) {
  if (j == -1) return profile.low(r);
  return profile.shell(std::ldexp(r, -j));
}

namespace {

Spectrum block_spectrum(const Grid& grid, const Spectrum& src, int j, const CutoffProfile& profile) {
  require_resolved(grid, j);
  Spectrum out = Spectrum::Zero(src.size());
  const double lo = j == -1 ? 0.0 : 0.75 * std::ldexp(1.0, j);
  const double hi = shell_outer_radius(j);
  for_each_mode(grid, [&](std::size_t idx, const Mode& m) {
    const double r = m.radius();
    if (r < lo || r > hi) return;
    const auto i = static_cast<Eigen::Index>(idx);
    out[i] = src[i] * block_multiplier(profile, j, r);
  });
  return out;
}

}  // namespace

Field dyadic_block(const Field& u, int j, const CutoffProfile& profile) {
  return Field::from_spectrum(u.grid(), block_spectrum(u.grid(), u.spectrum(), j, profile));
}

VectorField dyadic_block(const VectorField& u, int j, const CutoffProfile& profile) {
  return {dyadic_block(u.c1, j, profile), dyadic_block(u.c2, j, profile), u.divergence_free};
}

Field DyadicDecomposition::sum() const {
  Field acc(blocks.front().grid());
  for (const auto& b : blocks) acc += b;
  return acc;
}

DyadicDecomposition decompose(const Field& u, int j_max, const CutoffProfile& profile) {
  DyadicDecomposition d;
  d.j_max = j_max;
  for (int j = -1; j <= j_max; ++j) d.blocks.push_back(dyadic_block(u, j, profile));
  return d;
}

double lp_norm(const Eigen::ArrayXd& samples, double cell_volume, double p) {
  if (p < 1.0) throw ConfigError("L^p exponent must be >= 1");
  if (std::isinf(p)) return samples.size() ? samples.abs().maxCoeff() : 0.0;
  if (p == 1.0) return cell_volume * samples.abs().sum();
  if (p == 2.0) return std::sqrt(cell_volume * samples.square().sum());
  const double m = samples.abs().maxCoeff();
  if (m == 0.0) return 0.0;
  // Scale by the max so large p does not overflow.
  return m * std::pow(cell_volume * (samples.abs() / m).pow(p).sum(), 1.0 / p);
}

double lp_norm(const Field& u, double p) { return lp_norm(u.samples(), u.grid().cell_volume(), p); }

double lp_norm(const VectorField& u, double p) {
  const Eigen::ArrayXd len = (u.c1.samples().square() + u.c2.samples().square()).sqrt();
  return lp_norm(len, u.grid().cell_volume(), p);
}

std::vector<double> besov_profile(const Field& u, const BesovIndex& idx, int j_max,
                                  const CutoffProfile& profile) {
  require_resolved(u.grid(), j_max);
  std::vector<double> out;
  for (int j = -1; j <= j_max; ++j) {
    out.push_back(std::pow(2.0, j * idx.s) * lp_norm(dyadic_block(u, j, profile), idx.p));
  }
  return out;
}

std::vector<double> besov_profile(const VectorField& u, const BesovIndex& idx, int j_max,
                                  const CutoffProfile& profile) {
  require_resolved(u.grid(), j_max);
  std::vector<double> out;
  for (int j = -1; j <= j_max; ++j) {
    out.push_back(std::pow(2.0, j * idx.s) * lp_norm(dyadic_block(u, j, profile), idx.p));
  }
  return out;
}

double besov_norm(const Field& u, const BesovIndex& idx, std::optional<int> j_max,
                  const CutoffProfile& profile) {
  const auto prof = besov_profile(u, idx, j_max.value_or(max_resolved_shell(u.grid())), profile);
  return *std::max_element(prof.begin(), prof.end());
}

double besov_norm(const VectorField& u, const BesovIndex& idx, std::optional<int> j_max,
                  const CutoffProfile& profile) {
  const auto prof = besov_profile(u, idx, j_max.value_or(max_resolved_shell(u.grid())), profile);
  return *std::max_element(prof.begin(), prof.end());
}

Field commutator(const Field& v, const Field& f, int k, const CutoffProfile& profile) {
  require_same_grid(v, f);
  const Field df = derivative(f);
  return dyadic_block(dealiased_product(v, df), k, profile) -
         dealiased_product(v, dyadic_block(df, k, profile));
}

}  // namespace illposed
