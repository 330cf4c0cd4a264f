#include "illposed/field.hpp"

#include "illposed/errors.hpp"
#include "illposed/fft.hpp"
#include "illposed/vector_field.hpp"

namespace illposed {

Field::Field(const Grid& grid)
    : grid_(grid),
      samples_(Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(grid.size()))),
      cache_(std::make_shared<Cache>()) {}

Field::Field(const Grid& grid, Eigen::ArrayXd samples)
    : grid_(grid), samples_(std::move(samples)), cache_(std::make_shared<Cache>()) {
  if (static_cast<std::size_t>(samples_.size()) != grid.size()) {
    throw GridMismatch("sample count does not match grid size");
  }
}

Field Field::constant(const Grid& grid, double value) {
  return Field(grid, Eigen::ArrayXd::Constant(static_cast<Eigen::Index>(grid.size()), value));
}

Field Field::from_spectrum(const Grid& grid, const Spectrum& spectrum) {
  Field f(grid, inverse_dft(grid, spectrum));
  auto& c = *f.cache_;
  std::call_once(c.once, [&] { c.spectrum = spectrum; });
  return f;
}

Eigen::ArrayXd& Field::mutable_samples() {
  cache_ = std::make_shared<Cache>();
  return samples_;
}

const Spectrum& Field::spectrum() const {
  auto& c = *cache_;
  std::call_once(c.once, [&] { c.spectrum = forward_dft(grid_, samples_); });
  return c.spectrum;
}

void require_same_grid(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw GridMismatch("fields live on different grids");
}

Field& Field::operator+=(const Field& o) {
  require_same_grid(*this, o);
  mutable_samples() += o.samples_;
  return *this;
}

Field& Field::operator-=(const Field& o) {
  require_same_grid(*this, o);
  mutable_samples() -= o.samples_;
  return *this;
}

Field& Field::operator*=(double a) {
  mutable_samples() *= a;
  return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator-(Field a) { return a *= -1.0; }
Field operator*(Field a, double c) { return a *= c; }
Field operator*(double c, Field a) { return a *= c; }

Field operator*(const Field& a, const Field& b) {
  require_same_grid(a, b);
  return Field(a.grid(), a.samples() * b.samples());
}

VectorField::VectorField(Field a, Field b, bool div_free)
    : c1(std::move(a)), c2(std::move(b)), divergence_free(div_free) {
  require_same_grid(c1, c2);
  if (c1.grid().dim() != 2) throw GridMismatch("vector fields need a 2D grid");
}

VectorField::VectorField(const Grid& grid) : VectorField(Field(grid), Field(grid), true) {}

double VectorField::max_abs() const {
  return (c1.samples().square() + c2.samples().square()).sqrt().maxCoeff();
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  return {a.c1 + b.c1, a.c2 + b.c2, a.divergence_free && b.divergence_free};
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  return {a.c1 - b.c1, a.c2 - b.c2, a.divergence_free && b.divergence_free};
}

VectorField operator*(double c, const VectorField& a) { return {c * a.c1, c * a.c2, a.divergence_free}; }

}  // namespace illposed
