#pragma once

#include <stdexcept>
#include <string>

namespace illposed {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dyadic shell whose outer radius 8/3 * 2^j lies above the grid Nyquist
/// frequency was requested.
class UnresolvedShell : public Error {
 public:
  UnresolvedShell(int shell, double outer_radius, double nyquist);
  int shell() const noexcept { return shell_; }

 private:
  int shell_;
};

/// Burgers characteristics are about to cross: 1 + t * min(u0') fell below
/// the configured margin.
class ShockTooClose : public Error {
 public:
  ShockTooClose(double t, double margin, double required);
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

/// Newton failed and the bisection bracket did not contain a root.
class NewtonDivergence : public Error {
 public:
  using Error::Error;
};

class CFLViolation : public Error {
 public:
  using Error::Error;
};

class NonDivergenceFree : public Error {
 public:
  NonDivergenceFree(double max_divergence, double tolerance);
};

class DegenerateFit : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration, CLI override or serialized input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace illposed
