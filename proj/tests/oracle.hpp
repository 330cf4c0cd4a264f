#pragma once
// Test-side reference computations. Deliberately naive: O(N^2) DFTs and the
// cutoffs written out from their definitions, no library code involved.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

inline double ramp(double t) {
  const auto B = [](double x) { return x > 0 ? std::exp(-1.0 / x) : 0.0; };
  return B(t) / (B(t) + B(1.0 - t));
}

// theta(r) = 1 on [0, 3/4], 0 beyond 4/3.
inline double theta(double r) {
  if (r <= 0.75) return 1.0;
  if (r >= 4.0 / 3.0) return 0.0;
  return ramp((4.0 / 3.0 - r) / (4.0 / 3.0 - 0.75));
}

inline double shell(int j, double r) {
  if (j == -1) return theta(r);
  const double q = r / std::ldexp(1.0, j);
  return theta(q / 2) - theta(q);
}

// Delta_j of periodic samples on [-L pi, L pi) by a direct DFT.
inline std::vector<double> block(const std::vector<double>& u, double L, int j) {
  const std::size_t n = u.size();
  const double tau = 2.0 * std::numbers::pi;
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const long kk = k <= n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
    const double m = shell(j, std::abs(kk) / L);
    if (m == 0.0) continue;
    std::complex<double> c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += u[i] * std::polar(1.0, -tau * double(k) * double(i) / double(n));
    c *= m / double(n);
    for (std::size_t i = 0; i < n; ++i) out[i] += (c * std::polar(1.0, tau * double(k) * double(i) / double(n))).real();
  }
  return out;
}

inline double lp(const std::vector<double>& u, double cell, double p) {
  if (std::isinf(p)) {
    double m = 0;
    for (double v : u) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0;
  for (double v : u) s += std::pow(std::abs(v), p);
  return std::pow(s * cell, 1.0 / p);
}

}  // namespace oracle
