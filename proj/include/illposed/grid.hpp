#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

namespace illposed {

inline constexpr double kPi = std::numbers::pi;

/// Uniform periodic grid on the box [-L*pi, L*pi]^dim, L = half_width.
///
/// Sample i on an axis sits at x_i = -L*pi + i*h with h = 2*L*pi / points,
/// so the origin is the sample with index points / 2. Fourier modes on an
/// axis are the angular frequencies xi = k / L for integer k, and the
/// Nyquist frequency is points / (2 L).
class Grid {
 public:
  Grid(int dim, int points_per_axis, double half_width = 16.0);

  int dim() const noexcept { return dim_; }
  int points() const noexcept { return points_; }
  double half_width() const noexcept { return half_width_; }

  double period() const noexcept { return 2.0 * kPi * half_width_; }
  double spacing() const noexcept { return period() / points_; }
  double cell_volume() const noexcept { return std::pow(spacing(), dim_); }
  double coordinate(int i) const noexcept { return -kPi * half_width_ + i * spacing(); }
  int origin_index() const noexcept { return points_ / 2; }

  double nyquist() const noexcept { return points_ / (2.0 * half_width_); }
  double frequency(int k) const noexcept { return k / half_width_; }

  /// Number of real samples, points^dim.
  std::size_t size() const noexcept;
  /// Number of stored r2c coefficients: the last axis is halved.
  std::size_t spectral_size() const noexcept;

  /// The same axis as a one dimensional grid.
  Grid axis() const { return Grid(1, points_, half_width_); }
  /// Same box with `factor` times as many points per axis.
  Grid refined(int factor) const { return Grid(dim_, points_ * factor, half_width_); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int dim_;
  int points_;
  double half_width_;
};

/// One stored Fourier coefficient of a real field.
///
/// In 1D the stored axis is x1 with k1 in [0, n/2]. In 2D rows run over the
/// full x1 axis (signed k1) and columns over the halved x2 axis.
struct Mode {
  int k1 = 0;
  int k2 = 0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  bool nyquist1 = false;
  bool nyquist2 = false;

  double radius() const noexcept { return std::hypot(xi1, xi2); }
};

/// Calls f(index, mode) for every stored coefficient in storage order.
template <class F>
void for_each_mode(const Grid& grid, F&& f) {
  const int n = grid.points();
  const int half = n / 2 + 1;
  if (grid.dim() == 1) {
    for (int k = 0; k < half; ++k) {
      f(static_cast<std::size_t>(k), Mode{k, 0, grid.frequency(k), 0.0, k == n / 2, false});
    }
    return;
  }
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    const int k1 = i <= n / 2 ? i : i - n;
    const double xi1 = grid.frequency(k1);
    for (int k = 0; k < half; ++k, ++idx) {
      f(idx, Mode{k1, k, xi1, grid.frequency(k), i == n / 2, k == n / 2});
    }
  }
}

}  // namespace illposed
