#include "illposed/euler2d.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "illposed/errors.hpp"
#include "illposed/fft.hpp"
#include "illposed/fit.hpp"
#include "illposed/spectral.hpp"

namespace illposed {

using cd = std::complex<double>;

namespace {

void require_2d(const Grid& g) {
  if (g.dim() != 2) throw GridMismatch("operation needs a 2D grid");
}

// Wavenumbers with Nyquist components dropped, so multipliers stay real-symmetric.
struct Wavenumbers {
  Eigen::ArrayXd xi1, xi2, inv_k2, mask;

  explicit Wavenumbers(const Grid& g) {
    const auto m = static_cast<Eigen::Index>(g.spectral_size());
    xi1.resize(m);
    xi2.resize(m);
    inv_k2.resize(m);
    mask.resize(m);
    const int cut = g.points() / 3;
    for_each_mode(g, [&](std::size_t idx, const Mode& md) {
      const auto i = static_cast<Eigen::Index>(idx);
      xi1[i] = md.nyquist1 ? 0.0 : md.xi1;
      xi2[i] = md.nyquist2 ? 0.0 : md.xi2;
      const double k2 = md.xi1 * md.xi1 + md.xi2 * md.xi2;
      inv_k2[i] = k2 > 0.0 ? 1.0 / k2 : 0.0;
      mask[i] = (std::abs(md.k1) > cut || std::abs(md.k2) > cut) ? 0.0 : 1.0;
    });
  }
};

Eigen::ArrayXcd times_i(const Eigen::ArrayXcd& a, const Eigen::ArrayXd& xi) {
  return a * (xi.cast<cd>() * cd(0.0, 1.0));
}

}  // namespace

Field divergence(const VectorField& u) { return derivative(u.c1, 0) + derivative(u.c2, 1); }

Field curl(const VectorField& u) { return derivative(u.c2, 0) - derivative(u.c1, 1); }

void require_divergence_free(const VectorField& u, double tol) {
  const double d = divergence(u).max_abs();
  if (!(d <= tol)) throw NonDivergenceFree(d, tol);
}

LerayProjector::LerayProjector(const Grid& grid) : grid_(grid) {
  require_2d(grid);
  const Wavenumbers w(grid);
  // The dropped-Nyquist xi keeps P symmetric under conjugation.
  const Eigen::ArrayXd k2 = w.xi1.square() + w.xi2.square();
  const Eigen::ArrayXd inv = (k2 > 0.0).select(k2.inverse(), 0.0);
  a11_ = w.xi1.square() * inv;
  a12_ = w.xi1 * w.xi2 * inv;
  a22_ = w.xi2.square() * inv;
}

VectorField LerayProjector::project(const VectorField& f) const {
  if (!(f.grid() == grid_)) throw GridMismatch("projector built for another grid");
  const Eigen::ArrayXcd& a = f.c1.spectrum();
  const Eigen::ArrayXcd& b = f.c2.spectrum();
  const Eigen::ArrayXcd p1 = a - (a11_.cast<cd>() * a + a12_.cast<cd>() * b);
  const Eigen::ArrayXcd p2 = b - (a12_.cast<cd>() * a + a22_.cast<cd>() * b);
  return {Field::from_spectrum(grid_, p1), Field::from_spectrum(grid_, p2), true};
}

VectorField LerayProjector::complement(const VectorField& f) const {
  const VectorField p = project(f);
  return {f.c1 - p.c1, f.c2 - p.c2, false};
}

VectorField leray_project(const VectorField& f) { return LerayProjector(f.grid()).project(f); }
VectorField leray_complement(const VectorField& f) { return LerayProjector(f.grid()).complement(f); }

VectorField advect(const VectorField& u, const VectorField& v) {
  VectorField out(u.grid());
  for (int i = 0; i < 2; ++i) {
    out[i] = dealiased_product(u.c1, derivative(v[i], 0)) + dealiased_product(u.c2, derivative(v[i], 1));
  }
  out.divergence_free = false;
  return out;
}

VectorField velocity_from_vorticity(const Field& omega, double mean1, double mean2) {
  const Grid& g = omega.grid();
  require_2d(g);
  const Wavenumbers w(g);
  const Eigen::ArrayXcd psi = omega.spectrum() * w.inv_k2.cast<cd>();
  Eigen::ArrayXcd u1 = times_i(psi, w.xi2), u2 = -times_i(psi, w.xi1);
  const double n2 = static_cast<double>(g.size());
  u1[0] = mean1 * n2;
  u2[0] = mean2 * n2;
  return {Field::from_spectrum(g, u1), Field::from_spectrum(g, u2), true};
}

namespace {

class EulerKernel {
 public:
  EulerKernel(const Grid& g, double m1, double m2) : g_(g), w_(g), m1_(m1), m2_(m2) {}

  // -mask * FFT(u . grad omega); five transforms.
  Eigen::ArrayXcd rhs(const Eigen::ArrayXcd& wh, double* umax = nullptr) const {
    const Eigen::ArrayXcd psi = wh * w_.inv_k2.cast<cd>();
    const Eigen::ArrayXd u1 = inverse_dft(g_, times_i(psi, w_.xi2)) + m1_;
    const Eigen::ArrayXd u2 = inverse_dft(g_, (-times_i(psi, w_.xi1)).eval()) + m2_;
    const Eigen::ArrayXd wx = inverse_dft(g_, times_i(wh, w_.xi1));
    const Eigen::ArrayXd wy = inverse_dft(g_, times_i(wh, w_.xi2));
    if (umax) *umax = (u1.square() + u2.square()).sqrt().maxCoeff();
    Eigen::ArrayXcd nl = forward_dft(g_, (u1 * wx + u2 * wy).eval());
    return -(nl * w_.mask.cast<cd>());
  }

 private:
  Grid g_;
  Wavenumbers w_;
  double m1_, m2_;
};

}  // namespace

std::vector<EulerState> solve_euler_snapshots(const VectorField& u0, std::vector<double> times,
                                              EulerOptions opt) {
  const Grid& g = u0.grid();
  require_2d(g);
  require_divergence_free(u0);
  const double n2 = static_cast<double>(g.size());
  const double m1 = u0.c1.spectrum()[0].real() / n2;
  const double m2 = u0.c2.spectrum()[0].real() / n2;
  const Field omega0 = curl(u0);
  const EulerKernel K(g, m1, m2);

  std::vector<std::size_t> order(times.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return times[a] < times[b]; });

  std::vector<EulerState> out(times.size(), EulerState{0.0, Field(g), VectorField(g)});
  Eigen::ArrayXcd wh = omega0.spectrum();
  double t = 0.0;
  for (std::size_t oi : order) {
    const double target = times[oi];
    if (target < 0.0) throw ConfigError("negative time requested");
    while (target - t > 1e-14 * std::max(1.0, target)) {
      double umax = 0.0;
      const Eigen::ArrayXcd k1 = K.rhs(wh, &umax);
      if (!std::isfinite(umax)) throw CFLViolation("Euler solution blew up at t = " + std::to_string(t));
      double dt;
      if (opt.dt) {
        dt = *opt.dt;
        if (umax * dt / g.spacing() > 1.0) {
          throw CFLViolation("fixed step gives Courant number " + std::to_string(umax * dt / g.spacing()));
        }
      } else {
        dt = umax > 0.0 ? opt.cfl * g.spacing() / umax : target - t;
      }
      dt = std::min(dt, target - t);
      const Eigen::ArrayXcd k2 = K.rhs(wh + 0.5 * dt * k1);
      const Eigen::ArrayXcd k3 = K.rhs(wh + 0.5 * dt * k2);
      const Eigen::ArrayXcd k4 = K.rhs(wh + dt * k3);
      wh += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      t += dt;
    }
    t = target;
    if (target == 0.0) {
      out[oi] = {0.0, omega0, u0};
    } else {
      Field w = Field::from_spectrum(g, wh);
      out[oi] = {target, w, velocity_from_vorticity(w, m1, m2)};
    }
  }
  return out;
}

VectorField solve_euler(const VectorField& u0, double t, std::optional<double> dt) {
  EulerOptions opt;
  opt.dt = dt;
  return solve_euler_snapshots(u0, {t}, opt).front().velocity;
}

double kinetic_energy(const VectorField& u) {
  return 0.5 * u.grid().cell_volume() * (u.c1.samples().square() + u.c2.samples().square()).sum();
}

double enstrophy(const Field& omega) { return 0.5 * omega.grid().cell_volume() * omega.samples().square().sum(); }

double jacobian_margin(const VectorField& u0, double t) {
  const Eigen::ArrayXd a = derivative(u0.c1, 0).samples(), b = derivative(u0.c1, 1).samples();
  const Eigen::ArrayXd c = derivative(u0.c2, 0).samples(), d = derivative(u0.c2, 1).samples();
  return ((1.0 + t * a) * (1.0 + t * d) - t * t * b * c).minCoeff();
}

namespace {

double gradient_bound(const VectorField& u) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) m = std::max(m, derivative(u[i], k).max_abs());
  return 2.0 * m;
}

Eigen::ArrayXd coordinates(const Grid& g, int axis) {
  const int n = g.points();
  Eigen::ArrayXd x(static_cast<Eigen::Index>(g.size()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x[static_cast<Eigen::Index>(i) * n + j] = g.coordinate(axis == 0 ? i : j);
  return x;
}

}  // namespace

FrozenCharacteristics2D::FrozenCharacteristics2D(const VectorField& u0, double t,
                                                 std::vector<VectorField> sources, FrozenOptions2D opt)
    : t_(t), substeps_(0), opt_(opt), grid_(u0.grid()) {
  require_2d(grid_);
  if (t < 0.0) throw ConfigError("negative time requested");
  const double m = jacobian_margin(u0, t);
  if (m < opt.margin) throw ShockTooClose(t, m, opt.margin);
  substeps_ = opt.substeps > 0 ? opt.substeps
                               : std::max(1, static_cast<int>(std::ceil(t * gradient_bound(u0) / opt.step_bound)));
  y1_ = coordinates(grid_, 0);
  y2_ = coordinates(grid_, 1);
  for (std::size_t k = 0; k < sources.size(); ++k) integrals_.emplace_back(grid_);
  if (t == 0.0) return;

  const PeriodicInterpolator U1(u0.c1, opt.interp), U2(u0.c2, opt.interp);
  std::vector<PeriodicInterpolator> G;
  for (const auto& s : sources) {
    G.emplace_back(s.c1, opt.interp);
    G.emplace_back(s.c2, opt.interp);
  }
  std::vector<Eigen::ArrayXd> I(G.size(), Eigen::ArrayXd::Zero(y1_.size()));
  const double h = t / substeps_;
  for (int step = 0; step < substeps_; ++step) {
    const Eigen::ArrayXd a1 = -U1.evaluate(y1_, y2_), a2 = -U2.evaluate(y1_, y2_);
    const Eigen::ArrayXd p1 = y1_ + 0.5 * h * a1, p2 = y2_ + 0.5 * h * a2;
    const Eigen::ArrayXd b1 = -U1.evaluate(p1, p2), b2 = -U2.evaluate(p1, p2);
    const Eigen::ArrayXd q1 = y1_ + 0.5 * h * b1, q2 = y2_ + 0.5 * h * b2;
    const Eigen::ArrayXd c1 = -U1.evaluate(q1, q2), c2 = -U2.evaluate(q1, q2);
    const Eigen::ArrayXd r1 = y1_ + h * c1, r2 = y2_ + h * c2;
    const Eigen::ArrayXd d1 = -U1.evaluate(r1, r2), d2 = -U2.evaluate(r1, r2);
    for (std::size_t k = 0; k < G.size(); ++k) {
      I[k] += h / 6.0 *
              (G[k].evaluate(y1_, y2_) + 2.0 * G[k].evaluate(p1, p2) + 2.0 * G[k].evaluate(q1, q2) +
               G[k].evaluate(r1, r2));
    }
    y1_ += h / 6.0 * (a1 + 2.0 * b1 + 2.0 * c1 + d1);
    y2_ += h / 6.0 * (a2 + 2.0 * b2 + 2.0 * c2 + d2);
  }
  for (std::size_t k = 0; k < sources.size(); ++k) {
    integrals_[k] = VectorField(Field(grid_, std::move(I[2 * k])), Field(grid_, std::move(I[2 * k + 1])));
  }
}

Field FrozenCharacteristics2D::transport(const Field& init) const {
  if (!(init.grid() == grid_)) throw GridMismatch("initial field on another grid");
  if (t_ == 0.0) return init;
  return Field(grid_, PeriodicInterpolator(init, opt_.interp).evaluate(y1_, y2_));
}

VectorField FrozenCharacteristics2D::transport(const VectorField& init) const {
  return {transport(init.c1), transport(init.c2), false};
}

Field compose_shifted(const Field& g, const VectorField& u0, double t, PeriodicInterpolator::Options interp) {
  require_same_grid(g, u0.c1);
  if (t == 0.0) return g;
  const Eigen::ArrayXd x1 = coordinates(g.grid(), 0) - t * u0.c1.samples();
  const Eigen::ArrayXd x2 = coordinates(g.grid(), 1) - t * u0.c2.samples();
  return Field(g.grid(), PeriodicInterpolator(g, interp).evaluate(x1, x2));
}

VectorField compose_shifted(const VectorField& g, const VectorField& u0, double t,
                            PeriodicInterpolator::Options interp) {
  return {compose_shifted(g.c1, u0, t, interp), compose_shifted(g.c2, u0, t, interp), false};
}

std::pair<VectorField, VectorField> ap4_pair(const VectorField& u0, const VectorField& u0n, int n, double t,
                                             PeriodicInterpolator::Options interp) {
  return {compose_shifted(dyadic_block(u0, n), u0, t, interp),
          compose_shifted(dyadic_block(u0n, n), u0n, t, interp)};
}

CascadeTable euler_cascade(const VectorField& u0, int n, std::vector<double> times, const BesovIndex& idx,
                           EulerCascadeOptions opt) {
  CascadeTable tab;
  tab.n = n;
  tab.idx = idx;
  tab.rhs = "leray";
  std::sort(times.begin(), times.end());
  const int jn = opt.norm_j_max >= 0 ? opt.norm_j_max : max_resolved_shell(u0.grid());
  const auto exact = solve_euler_snapshots(u0, times, opt.euler);
  const VectorField source = leray_complement(advect(u0, u0));
  const VectorField block = dyadic_block(u0, n);
  const double w = std::pow(2.0, n * idx.s);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const FrozenCharacteristics2D fc(u0, t, {source}, opt.frozen);
    const VectorField ap2 = fc.transport(u0);
    const VectorField ap1 = ap2 + fc.integral(0);
    const VectorField ap3 = fc.transport(block);
    const VectorField ap4 = compose_shifted(block, u0, t, opt.frozen.interp);
    CascadeRow row;
    row.t = t;
    row.err_ap1 = besov_norm(exact[i].velocity - ap1, {idx.s - 1.0, idx.p}, jn);
    row.err_ap2 = besov_norm(ap1 - ap2, idx, jn);
    row.err_ap3 = w * lp_norm(dyadic_block(ap2, n) - ap3, idx.p);
    row.err_ap4 = w * lp_norm(ap4 - ap3, idx.p);
    tab.rows.push_back(row);
  }
  std::vector<double> ts, e[4];
  for (const auto& r : tab.rows) {
    if (r.t == 0.0) continue;
    ts.push_back(r.t);
    e[0].push_back(r.err_ap1);
    e[1].push_back(r.err_ap2);
    e[2].push_back(r.err_ap3);
    e[3].push_back(r.err_ap4);
  }
  if (ts.size() >= 3) {
    // A series that vanishes identically (e.g. ap2 without a source) has no order.
    for (int k = 0; k < 4; ++k) {
      const bool positive = std::all_of(e[k].begin(), e[k].end(), [](double v) { return v > 0.0; });
      tab.order[k] = positive ? fit_order(ts, e[k]) : std::nan("");
    }
  }
  return tab;
}

}  // namespace illposed
