#pragma once

#include <cmath>

namespace illposed {

// C-infinity ramp: 0 for t <= 0, 1 for t >= 1.
template <class Scalar>
Scalar smooth_step(Scalar t) {
  using std::exp;
  if (t <= Scalar(0)) return Scalar(0);
  if (t >= Scalar(1)) return Scalar(1);
  const Scalar a = exp(-Scalar(1) / t);
  const Scalar b = exp(-Scalar(1) / (Scalar(1) - t));
  return a / (a + b);
}

/// Radial bump equal to 1 on [plateau_inner, plateau_outer] and 0 outside
/// (support_inner, support_outer). A negative support_inner means the bump
/// is a disc rather than an annulus.
template <class Scalar = double>
struct RadialBump {
  Scalar support_inner;
  Scalar plateau_inner;
  Scalar plateau_outer;
  Scalar support_outer;

  Scalar operator()(Scalar r) const {
    using std::abs;
    r = abs(r);
    if (r > plateau_outer) {
      return smooth_step((support_outer - r) / (support_outer - plateau_outer));
    }
    if (support_inner >= Scalar(0) && r < plateau_inner) {
      return smooth_step((r - support_inner) / (plateau_inner - support_inner));
    }
    return Scalar(1);
  }

  RadialBump scaled(Scalar c) const {
    return {support_inner < Scalar(0) ? support_inner : c * support_inner, c * plateau_inner,
            c * plateau_outer, c * support_outer};
  }
};

/// theta(r) = 1 on r <= 3/4, 0 on r >= 4/3; shell(r) = theta(r/2) - theta(r).
struct CutoffProfile {
  RadialBump<double> theta{-1.0, 0.0, 0.75, 4.0 / 3.0};

  double low(double r) const { return theta(r); }
  double shell(double r) const { return theta(0.5 * r) - theta(r); }
};

inline CutoffProfile make_cutoff_pair() { return CutoffProfile{}; }

}  // namespace illposed
