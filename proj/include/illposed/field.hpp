#pragma once

#include <Eigen/Core>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <type_traits>

#include "illposed/grid.hpp"

namespace illposed {

using Spectrum = Eigen::ArrayXcd;

/// Real samples on a Grid plus a lazily computed r2c spectrum.
///
/// 2D samples are row-major with x1 as the row index: value at
/// (x1_i, x2_j) lives at i * n + j. Copies share the spectrum cache until
/// one of them is mutated.
class Field {
 public:
  explicit Field(const Grid& grid);
  Field(const Grid& grid, Eigen::ArrayXd samples);

  template <class F>
  static Field sample(const Grid& grid, F&& f);
  static Field constant(const Grid& grid, double value);
  static Field from_spectrum(const Grid& grid, const Spectrum& spectrum);

  const Grid& grid() const noexcept { return grid_; }
  const Eigen::ArrayXd& samples() const noexcept { return samples_; }
  /// Mutable access drops the cached spectrum.
  Eigen::ArrayXd& mutable_samples();

  double operator[](std::size_t i) const { return samples_[static_cast<Eigen::Index>(i)]; }
  double at(int i, int j) const { return samples_[static_cast<Eigen::Index>(i) * grid_.points() + j]; }

  /// Unnormalized forward DFT; computed once and shared between copies.
  const Spectrum& spectrum() const;

  double max_abs() const { return samples_.abs().maxCoeff(); }

  Field& operator+=(const Field& o);
  Field& operator-=(const Field& o);
  Field& operator*=(double a);

 private:
  struct Cache {
    std::once_flag once;
    Spectrum spectrum;
  };

  Grid grid_;
  Eigen::ArrayXd samples_;
  std::shared_ptr<Cache> cache_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator-(Field a);
Field operator*(Field a, double c);
Field operator*(double c, Field a);
/// Pointwise product, no dealiasing.
Field operator*(const Field& a, const Field& b);

void require_same_grid(const Field& a, const Field& b);

template <class F>
Field Field::sample(const Grid& grid, F&& f) {
  const int n = grid.points();
  Eigen::ArrayXd v(static_cast<Eigen::Index>(grid.size()));
  if constexpr (std::is_invocable_v<F, double>) {
    if (grid.dim() != 1) throw std::invalid_argument("one-argument sampler on a 2D grid");
    for (int i = 0; i < n; ++i) v[i] = f(grid.coordinate(i));
  } else {
    if (grid.dim() != 2) throw std::invalid_argument("two-argument sampler on a 1D grid");
    for (int i = 0; i < n; ++i) {
      const double x1 = grid.coordinate(i);
      for (int j = 0; j < n; ++j) v[static_cast<Eigen::Index>(i) * n + j] = f(x1, grid.coordinate(j));
    }
  }
  return Field(grid, std::move(v));
}

}  // namespace illposed
