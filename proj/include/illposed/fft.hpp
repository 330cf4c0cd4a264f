#pragma once

#include <Eigen/Core>

#include "illposed/grid.hpp"

namespace illposed {

// Real-to-complex transforms over the whole grid. The forward transform is
// unnormalized; inverse_dft divides by points^dim so the pair round-trips.
// Plans are cached per (dim, points) and shared between threads.
Eigen::ArrayXcd forward_dft(const Grid& grid, const Eigen::ArrayXd& samples);
Eigen::ArrayXd inverse_dft(const Grid& grid, const Eigen::ArrayXcd& spectrum);

}  // namespace illposed
