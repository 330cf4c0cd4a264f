#include "illposed/spectral.hpp"

#include <complex>

namespace illposed {

using cd = std::complex<double>;

Field derivative(const Field& u, int axis) {
  return apply_multiplier(u, [axis](const Mode& m) {
    const bool nyq = axis == 0 ? m.nyquist1 : m.nyquist2;
    return nyq ? cd(0.0) : cd(0.0, axis == 0 ? m.xi1 : m.xi2);
  });
}

Field antiderivative(const Field& u, int axis) {
  return apply_multiplier(u, [axis](const Mode& m) {
    const bool nyq = axis == 0 ? m.nyquist1 : m.nyquist2;
    const double xi = axis == 0 ? m.xi1 : m.xi2;
    return (nyq || xi == 0.0) ? cd(0.0) : cd(0.0, -1.0 / xi);
  });
}

Field dealias(const Field& u) {
  const int cut = u.grid().points() / 3;
  return apply_multiplier(u, [cut](const Mode& m) {
    return (std::abs(m.k1) > cut || std::abs(m.k2) > cut) ? 0.0 : 1.0;
  });
}

Field dealiased_product(const Field& a, const Field& b) {
  return dealias(dealias(a) * dealias(b));
}

}  // namespace illposed
