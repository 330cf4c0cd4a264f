#include "illposed/fit.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "illposed/errors.hpp"

namespace illposed {

double fit_order(const std::vector<double>& ts, const std::vector<double>& errs) {
  if (ts.size() != errs.size()) throw DegenerateFit("time and error lists differ in length");
  if (ts.size() < 3) throw DegenerateFit("order fit needs at least three points");
  const auto m = static_cast<Eigen::Index>(ts.size());
  Eigen::MatrixXd A(m, 2);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double t = ts[static_cast<std::size_t>(i)];
    const double e = errs[static_cast<std::size_t>(i)];
    if (!(t > 0.0) || !(e > 0.0) || !std::isfinite(e)) {
      throw DegenerateFit("order fit needs positive finite times and errors");
    }
    A(i, 0) = std::log(t);
    A(i, 1) = 1.0;
    b(i) = std::log(e);
  }
  if ((A.col(0).array() - A(0, 0)).abs().maxCoeff() == 0.0) throw DegenerateFit("all times coincide");
  return A.colPivHouseholderQr().solve(b)(0);
}

}  // namespace illposed
