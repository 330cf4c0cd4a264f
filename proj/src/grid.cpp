#include "illposed/grid.hpp"

#include <bit>
#include <string>

#include "illposed/errors.hpp"

namespace illposed {

Grid::Grid(int dim, int points_per_axis, double half_width)
    : dim_(dim), points_(points_per_axis), half_width_(half_width) {
  if (dim != 1 && dim != 2) throw ConfigError("grid dimension must be 1 or 2, got " + std::to_string(dim));
  if (points_per_axis < 16 || !std::has_single_bit(static_cast<unsigned>(points_per_axis))) {
    throw ConfigError("points per axis must be a power of two >= 16, got " +
                      std::to_string(points_per_axis));
  }
  if (!(half_width > 0.0)) throw ConfigError("box half width must be positive");
}

std::size_t Grid::size() const noexcept {
  const auto n = static_cast<std::size_t>(points_);
  return dim_ == 1 ? n : n * n;
}

std::size_t Grid::spectral_size() const noexcept {
  const auto n = static_cast<std::size_t>(points_);
  return dim_ == 1 ? n / 2 + 1 : n * (n / 2 + 1);
}

}  // namespace illposed
