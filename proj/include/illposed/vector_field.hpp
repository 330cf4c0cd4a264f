#pragma once

#include "illposed/field.hpp"

namespace illposed {

/// Two component field on a shared 2D grid.
struct VectorField {
  Field c1;
  Field c2;
  bool divergence_free = false;

  VectorField(Field a, Field b, bool div_free = false);
  explicit VectorField(const Grid& grid);

  const Grid& grid() const noexcept { return c1.grid(); }
  const Field& operator[](int i) const { return i == 0 ? c1 : c2; }
  Field& operator[](int i) { return i == 0 ? c1 : c2; }

  /// Max of the pointwise Euclidean norm.
  double max_abs() const;
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double c, const VectorField& a);

}  // namespace illposed
