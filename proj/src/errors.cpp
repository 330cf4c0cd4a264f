#include "illposed/errors.hpp"

#include <sstream>

namespace illposed {

namespace {
std::string shell_message(int shell, double outer, double nyquist) {
  std::ostringstream os;
  os << "shell " << shell << " reaches |xi| = " << outer << " above the grid Nyquist frequency "
     << nyquist;
  return os.str();
}

std::string shock_message(double t, double margin, double required) {
  std::ostringstream os;
  os << "characteristics too close to crossing at t = " << t << ": 1 + t*min(u0') = " << margin
     << " < " << required;
  return os.str();
}

std::string divergence_message(double d, double tol) {
  std::ostringstream os;
  os << "vector field is not divergence free: max |div| = " << d << " > " << tol;
  return os.str();
}
}  // namespace

UnresolvedShell::UnresolvedShell(int shell, double outer_radius, double nyquist)
    : Error(shell_message(shell, outer_radius, nyquist)), shell_(shell) {}

ShockTooClose::ShockTooClose(double t, double margin, double required)
    : Error(shock_message(t, margin, required)), margin_(margin) {}

NonDivergenceFree::NonDivergenceFree(double max_divergence, double tolerance)
    : Error(divergence_message(max_divergence, tolerance)) {}

}  // namespace illposed
