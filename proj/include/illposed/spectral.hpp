#pragma once

#include <complex>
#include <type_traits>

#include "illposed/field.hpp"

namespace illposed {

/// Multiplies every stored coefficient by m(mode) and transforms back.
template <class M>
Field apply_multiplier(const Field& u, M&& m) {
  Spectrum s = u.spectrum();
  for_each_mode(u.grid(), [&](std::size_t idx, const Mode& mode) {
    s[static_cast<Eigen::Index>(idx)] *= m(mode);
  });
  return Field::from_spectrum(u.grid(), s);
}

template <class G>
Field apply_radial_multiplier(const Field& u, G&& g) {
  return apply_multiplier(u, [&](const Mode& m) { return g(m.radius()); });
}

/// Spectral partial derivative along axis 0 (x1) or 1 (x2). The Nyquist
/// mode of that axis is dropped so the result stays real.
Field derivative(const Field& u, int axis = 0);

/// Zeroes every mode with |k| > n/3 on some axis.
Field dealias(const Field& u);

/// dealias(dealias(a) * dealias(b)).
Field dealiased_product(const Field& a, const Field& b);

/// -i/xi along the given axis, 0 at xi = 0 and at Nyquist.
Field antiderivative(const Field& u, int axis = 0);

}  // namespace illposed
