#pragma once

#include <vector>

#include "illposed/field.hpp"

namespace illposed {

/// Evaluates the trigonometric interpolant of a field at arbitrary points.
///
/// The field is first refined by zero padding its spectrum (exact on the
/// finer lattice), then a local Lagrange stencil on the refined samples is
/// used. Accuracy is governed by (xi_max * h / upsample)^stencil.
class PeriodicInterpolator {
 public:
  struct Options {
    int upsample = 4;
    int stencil = 10;
  };

  explicit PeriodicInterpolator(const Field& u);
  PeriodicInterpolator(const Field& u, Options opt);

  double operator()(double x) const;
  double operator()(double x1, double x2) const;

  /// Values at many 1D points.
  Eigen::ArrayXd evaluate(const Eigen::ArrayXd& x) const;
  /// Values at many 2D points.
  Eigen::ArrayXd evaluate(const Eigen::ArrayXd& x1, const Eigen::ArrayXd& x2) const;

  const Grid& grid() const noexcept { return coarse_; }

 private:
  Grid coarse_;
  Grid fine_;
  Options opt_;
  Eigen::ArrayXd fine_samples_;
  std::vector<double> bary_;
};

/// Samples of the field refined by an integer factor (spectral zero padding).
Field upsample(const Field& u, int factor);

}  // namespace illposed
