#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "illposed/cutoff.hpp"
#include "illposed/field.hpp"
#include "illposed/vector_field.hpp"

namespace illposed {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Besov index (s, p) with r fixed at infinity.
struct BesovIndex {
  double s = 2.0;
  double p = 2.0;
};

/// Outer radius 8/3 * 2^j of shell j (4/3 for j = -1).
inline double shell_outer_radius(int j) { return 8.0 / 3.0 * std::ldexp(1.0, j); }

/// Largest j with 8/3 * 2^j <= Nyquist.
int max_resolved_shell(const Grid& grid);

/// Throws UnresolvedShell when shell j does not fit below Nyquist.
void require_resolved(const Grid& grid, int j);

/// Delta_j u. Callers never pass j <= -2.
Field dyadic_block(const Field& u, int j, const CutoffProfile& profile = {});
VectorField dyadic_block(const VectorField& u, int j, const CutoffProfile& profile = {});

/// Multiplier value of Delta_j at radius r.
double block_multiplier(const CutoffProfile& profile, int j, double r);

struct DyadicDecomposition {
  int j_max = -1;
  std::vector<Field> blocks;  // blocks[0] is j = -1

  const Field& block(int j) const { return blocks.at(static_cast<std::size_t>(j + 1)); }
  Field sum() const;
};

DyadicDecomposition decompose(const Field& u, int j_max, const CutoffProfile& profile = {});

/// Riemann sum (h^d sum |u|^p)^(1/p); grid max for p = inf.
double lp_norm(const Field& u, double p);
/// L^p of the pointwise Euclidean length.
double lp_norm(const VectorField& u, double p);
double lp_norm(const Eigen::ArrayXd& samples, double cell_volume, double p);

/// 2^{js} ||Delta_j u||_p for j = -1..j_max (index 0 is j = -1).
std::vector<double> besov_profile(const Field& u, const BesovIndex& idx, int j_max,
                                  const CutoffProfile& profile = {});
std::vector<double> besov_profile(const VectorField& u, const BesovIndex& idx, int j_max,
                                  const CutoffProfile& profile = {});

/// sup over -1 <= j <= j_max. Without j_max the highest resolved shell is used.
double besov_norm(const Field& u, const BesovIndex& idx, std::optional<int> j_max = std::nullopt,
                  const CutoffProfile& profile = {});
double besov_norm(const VectorField& u, const BesovIndex& idx,
                  std::optional<int> j_max = std::nullopt, const CutoffProfile& profile = {});

/// [Delta_k, v] d_x f = Delta_k(v f') - v Delta_k f' with dealiased products (1D).
Field commutator(const Field& v, const Field& f, int k, const CutoffProfile& profile = {});

}  // namespace illposed
