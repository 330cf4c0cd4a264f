#pragma once

#include <vector>

namespace illposed {

/// Least-squares slope of log(errs) against log(ts). Needs three or more
/// points, all positive.
double fit_order(const std::vector<double>& ts, const std::vector<double>& errs);

}  // namespace illposed
