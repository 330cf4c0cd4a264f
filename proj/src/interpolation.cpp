#include "illposed/interpolation.hpp"

#include <cmath>

#include "illposed/errors.hpp"

namespace illposed {

Field upsample(const Field& u, int factor) {
  if (factor == 1) return u;
  const Grid& g = u.grid();
  const Grid fine = g.refined(factor);
  const int n = g.points();
  const int m = fine.points();
  const int hc = n / 2 + 1;
  const int hf = m / 2 + 1;
  const Spectrum& c = u.spectrum();
  Spectrum out = Spectrum::Zero(static_cast<Eigen::Index>(fine.spectral_size()));
  const double scale = std::pow(static_cast<double>(factor), g.dim());
  if (g.dim() == 1) {
    for (int k = 0; k < hc; ++k) out[k] = scale * c[k] * (k == n / 2 ? 0.5 : 1.0);
    return Field::from_spectrum(fine, out);
  }
  for (int i = 0; i < n; ++i) {
    // Coarse row i holds k1 = i or i - n; the Nyquist row is split evenly.
    int rows[2] = {i <= n / 2 ? i : m - (n - i), -1};
    double w = 1.0;
    if (i == n / 2) {
      rows[1] = m - n / 2;
      w = 0.5;
    }
    for (int r : rows) {
      if (r < 0) continue;
      for (int k = 0; k < hc; ++k) {
        const double wk = w * (k == n / 2 ? 0.5 : 1.0);
        out[static_cast<Eigen::Index>(r) * hf + k] = scale * wk * c[static_cast<Eigen::Index>(i) * hc + k];
      }
    }
  }
  return Field::from_spectrum(fine, out);
}

PeriodicInterpolator::PeriodicInterpolator(const Field& u) : PeriodicInterpolator(u, Options{}) {}

PeriodicInterpolator::PeriodicInterpolator(const Field& u, Options opt)
    : coarse_(u.grid()), fine_(u.grid().refined(opt.upsample)), opt_(opt) {
  if (opt.stencil < 2 || opt.stencil % 2 != 0 || opt.stencil > 64 || opt.stencil > fine_.points()) {
    throw ConfigError("interpolation stencil must be even and fit the grid");
  }
  fine_samples_ = upsample(u, opt.upsample).samples();
  // Barycentric weights of equispaced nodes: (-1)^k binom(m-1, k).
  const int m = opt.stencil;
  bary_.resize(static_cast<std::size_t>(m));
  double b = 1.0;
  for (int k = 0; k < m; ++k) {
    bary_[static_cast<std::size_t>(k)] = (k % 2 ? -b : b);
    b = b * (m - 1 - k) / (k + 1);
  }
}

namespace {

// Stencil weights for fractional offset `frac` from the node left of x; node
// k sits at offset k - m/2 + 1. bary_k / d_k is formed as
// bary_k * prod_{i != k} d_i (prefix and suffix products) so only the
// normalization divides. Returns false when x is a node.
template <int M>
inline bool stencil_weights(double frac, const double* bary, int m_runtime, double* w) {
  const int m = M > 0 ? M : m_runtime;
  if (frac == 0.0) {
    for (int k = 0; k < m; ++k) w[k] = (k == m / 2 - 1) ? 1.0 : 0.0;
    return false;
  }
  double d[64];
  for (int k = 0; k < m; ++k) d[k] = frac - (k - m / 2 + 1);
  double prefix = 1.0;
  for (int k = 0; k < m; ++k) {
    w[k] = prefix;
    prefix *= d[k];
  }
  double suffix = 1.0, total = 0.0;
  for (int k = m - 1; k >= 0; --k) {
    w[k] *= suffix * bary[k];
    suffix *= d[k];
    total += w[k];
  }
  const double inv = 1.0 / total;
  for (int k = 0; k < m; ++k) w[k] *= inv;
  return true;
}

struct Locator {
  double origin, inv_h;
  int points;

  // Periodic position in fine-grid units.
  double operator()(double x) const {
    double s = (x - origin) * inv_h;
    if (s < 0.0 || s >= points) s -= points * std::floor(s / points);
    return s;
  }
};

template <int M>
inline double eval_1d(const Locator& loc, const double* samples, const double* bary, int m_runtime, double x) {
  const int m = M > 0 ? M : m_runtime;
  const int n = loc.points;
  const double s = loc(x);
  const double fl = std::floor(s);
  const int start = static_cast<int>(fl) - m / 2 + 1;
  double w[64];
  stencil_weights<M>(s - fl, bary, m, w);
  double acc = 0.0;
  if (start >= 0 && start + m <= n) {
    const double* p = samples + start;
    for (int k = 0; k < m; ++k) acc += w[k] * p[k];
    return acc;
  }
  for (int k = 0; k < m; ++k) {
    int i = start + k;
    i = i < 0 ? i + n : (i >= n ? i - n : i);
    acc += w[k] * samples[i];
  }
  return acc;
}

template <int M>
void eval_many(const Locator& loc, const double* samples, const double* bary, int m, const Eigen::ArrayXd& x,
               Eigen::ArrayXd& out) {
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = eval_1d<M>(loc, samples, bary, m, x[i]);
}

}  // namespace

double PeriodicInterpolator::operator()(double x) const {
  if (coarse_.dim() != 1) throw GridMismatch("1D evaluation of a 2D field");
  const Locator loc{fine_.coordinate(0), 1.0 / fine_.spacing(), fine_.points()};
  return eval_1d<0>(loc, fine_samples_.data(), bary_.data(), opt_.stencil, x);
}

namespace {

template <int M>
inline double eval_2d(const Locator& loc, const double* samples, const double* bary, int m_runtime, double x1,
                      double x2) {
  const int m = M > 0 ? M : m_runtime;
  const int n = loc.points;
  const double s1 = loc(x1), s2 = loc(x2);
  const double f1 = std::floor(s1), f2 = std::floor(s2);
  const int a = static_cast<int>(f1) - m / 2 + 1;
  const int b = static_cast<int>(f2) - m / 2 + 1;
  double w1[64], w2[64];
  stencil_weights<M>(s1 - f1, bary, m, w1);
  stencil_weights<M>(s2 - f2, bary, m, w2);
  int cols[64];
  const bool contiguous = b >= 0 && b + m <= n;
  if (!contiguous) {
    for (int l = 0; l < m; ++l) {
      const int j = b + l;
      cols[l] = j < 0 ? j + n : (j >= n ? j - n : j);
    }
  }
  double acc = 0.0;
  for (int k = 0; k < m; ++k) {
    int i = a + k;
    i = i < 0 ? i + n : (i >= n ? i - n : i);
    const double* row = samples + static_cast<std::ptrdiff_t>(i) * n;
    double r = 0.0;
    if (contiguous) {
      for (int l = 0; l < m; ++l) r += w2[l] * row[b + l];
    } else {
      for (int l = 0; l < m; ++l) r += w2[l] * row[cols[l]];
    }
    acc += w1[k] * r;
  }
  return acc;
}

template <int M>
void eval_many_2d(const Locator& loc, const double* samples, const double* bary, int m, const Eigen::ArrayXd& x1,
                  const Eigen::ArrayXd& x2, Eigen::ArrayXd& out) {
  for (Eigen::Index i = 0; i < x1.size(); ++i) out[i] = eval_2d<M>(loc, samples, bary, m, x1[i], x2[i]);
}

}  // namespace

double PeriodicInterpolator::operator()(double x1, double x2) const {
  if (coarse_.dim() != 2) throw GridMismatch("2D evaluation of a 1D field");
  const Locator loc{fine_.coordinate(0), 1.0 / fine_.spacing(), fine_.points()};
  return eval_2d<0>(loc, fine_samples_.data(), bary_.data(), opt_.stencil, x1, x2);
}

Eigen::ArrayXd PeriodicInterpolator::evaluate(const Eigen::ArrayXd& x) const {
  if (coarse_.dim() != 1) throw GridMismatch("1D evaluation of a 2D field");
  const Locator loc{fine_.coordinate(0), 1.0 / fine_.spacing(), fine_.points()};
  Eigen::ArrayXd out(x.size());
  const double* f = fine_samples_.data();
  const double* b = bary_.data();
  switch (opt_.stencil) {
    case 8: eval_many<8>(loc, f, b, 8, x, out); break;
    case 10: eval_many<10>(loc, f, b, 10, x, out); break;
    case 12: eval_many<12>(loc, f, b, 12, x, out); break;
    default: eval_many<0>(loc, f, b, opt_.stencil, x, out); break;
  }
  return out;
}

Eigen::ArrayXd PeriodicInterpolator::evaluate(const Eigen::ArrayXd& x1, const Eigen::ArrayXd& x2) const {
  if (coarse_.dim() != 2) throw GridMismatch("2D evaluation of a 1D field");
  if (x1.size() != x2.size()) throw GridMismatch("coordinate arrays differ in length");
  const Locator loc{fine_.coordinate(0), 1.0 / fine_.spacing(), fine_.points()};
  Eigen::ArrayXd out(x1.size());
  const double* f = fine_samples_.data();
  const double* b = bary_.data();
  switch (opt_.stencil) {
    case 6: eval_many_2d<6>(loc, f, b, 6, x1, x2, out); break;
    case 8: eval_many_2d<8>(loc, f, b, 8, x1, x2, out); break;
    case 10: eval_many_2d<10>(loc, f, b, 10, x1, x2, out); break;
    default: eval_many_2d<0>(loc, f, b, opt_.stencil, x1, x2, out); break;
  }
  return out;
}

}  // namespace illposed
