#include "illposed/transport1d.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>

#include "illposed/errors.hpp"
#include "illposed/fft.hpp"
#include "illposed/constructions.hpp"
#include "illposed/fit.hpp"
#include "illposed/spectral.hpp"

namespace illposed {

double monotonicity_margin(const Field& u0, double t) {
  return 1.0 + t * derivative(u0).samples().minCoeff();
}

void require_pre_shock(const Field& u0, double t, double margin) {
  const double m = monotonicity_margin(u0, t);
  if (m < margin) throw ShockTooClose(t, m, margin);
}

FlowMap1D make_flow_map(const Field& u0, double t, double margin, PeriodicInterpolator::Options interp) {
  if (u0.grid().dim() != 1) throw GridMismatch("flow map needs a 1D field");
  require_pre_shock(u0, t, margin);
  const Grid& g = u0.grid();
  const PeriodicInterpolator U(u0, interp);
  const PeriodicInterpolator dU(derivative(u0), interp);
  const double umax = u0.max_abs();
  Eigen::ArrayXd fwd(g.points()), inv(g.points());
  for (int i = 0; i < g.points(); ++i) {
    const double x = g.coordinate(i);
    const double ui = u0[static_cast<std::size_t>(i)];
    fwd[i] = x + t * ui;
    double y = x - t * ui;
    bool done = t == 0.0;
    if (t == 0.0) y = x;
    for (int it = 0; it < 50 && !done; ++it) {
      const double r = y + t * U(y) - x;
      const double step = r / (1.0 + t * dU(y));
      y -= step;
      done = std::abs(step) < 1e-13 && std::abs(r) < 1e-12;
    }
    if (!done) {
      double lo = x - t * umax - 1e-12, hi = x + t * umax + 1e-12;
      if (lo + t * U(lo) - x > 0.0 || hi + t * U(hi) - x < 0.0) {
        throw NewtonDivergence("flow map inversion failed at x = " + std::to_string(x));
      }
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (mid + t * U(mid) - x > 0.0 ? hi : lo) = mid;
      }
      y = 0.5 * (lo + hi);
    }
    inv[i] = y;
  }
  return {t, u0, Field(g, std::move(fwd)), Field(g, std::move(inv))};
}

RhsHook zero_rhs() {
  return {"zero", [](const Field& u) { return Field(u.grid()); }, 0.0, 0.0};
}

RhsHook identity_rhs() {
  return {"identity", [](const Field& u) { return u; }, 1.0, 1.0};
}

Field solve_burgers_characteristics(const Field& u0, double t, double margin,
                                    PeriodicInterpolator::Options interp) {
  if (t == 0.0) return u0;
  const FlowMap1D eta = make_flow_map(u0, t, margin, interp);
  const PeriodicInterpolator U(u0, interp);
  return Field(u0.grid(), U.evaluate(eta.inverse.samples()));
}

namespace {

// -(u^2/2)_x with the 2/3 rule, three transforms per call.
class BurgersKernel {
 public:
  explicit BurgersKernel(const Grid& g) : g_(g) {
    const auto m = static_cast<Eigen::Index>(g.spectral_size());
    mask_.resize(m);
    dx_.resize(m);
    const int cut = g.points() / 3;
    for_each_mode(g, [&](std::size_t idx, const Mode& md) {
      const auto i = static_cast<Eigen::Index>(idx);
      mask_[i] = std::abs(md.k1) > cut ? 0.0 : 1.0;
      dx_[i] = md.nyquist1 ? 0.0 : md.xi1;
    });
  }

  Eigen::ArrayXd flux_term(const Eigen::ArrayXd& u) const {
    Eigen::ArrayXcd uh = forward_dft(g_, u);
    uh *= mask_;
    const Eigen::ArrayXd w = inverse_dft(g_, uh);
    Eigen::ArrayXcd ph = forward_dft(g_, (w * w).eval());
    const std::complex<double> I(0.0, 1.0);
    ph = ph * (mask_ * dx_ * -0.5).cast<std::complex<double>>() * I;
    return inverse_dft(g_, ph);
  }

 private:
  Grid g_;
  Eigen::ArrayXd mask_;
  Eigen::ArrayXd dx_;
};

}  // namespace

std::vector<Field> solve_burgers_stepped(const Field& u0, std::vector<double> times, const RhsHook& F,
                                         double cfl) {
  const Grid& g = u0.grid();
  if (g.dim() != 1) throw GridMismatch("Burgers solver needs a 1D field");
  std::vector<std::size_t> order(times.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return times[a] < times[b]; });

  const BurgersKernel K(g);
  auto rhs = [&](const Eigen::ArrayXd& u) -> Eigen::ArrayXd {
    Eigen::ArrayXd r = K.flux_term(u);
    if (F.evaluate) r += F.evaluate(Field(g, u)).samples();
    return r;
  };

  std::vector<Field> out(times.size(), Field(g));
  Eigen::ArrayXd u = u0.samples();
  double t = 0.0;
  for (std::size_t oi : order) {
    const double target = times[oi];
    if (target < 0.0) throw ConfigError("negative time requested");
    while (target - t > 1e-14 * std::max(1.0, target)) {
      const double umax = u.abs().maxCoeff();
      if (!std::isfinite(umax)) throw CFLViolation("Burgers solution blew up at t = " + std::to_string(t));
      double dt = umax > 0.0 ? cfl * g.spacing() / umax : target - t;
      dt = std::min(dt, target - t);
      const Eigen::ArrayXd k1 = rhs(u);
      const Eigen::ArrayXd k2 = rhs(u + 0.5 * dt * k1);
      const Eigen::ArrayXd k3 = rhs(u + 0.5 * dt * k2);
      const Eigen::ArrayXd k4 = rhs(u + dt * k3);
      u += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      t += dt;
    }
    t = target;
    out[oi] = Field(g, u);
  }
  return out;
}

Field solve_burgers_stepped(const Field& u0, double t, const RhsHook& F, double cfl) {
  return solve_burgers_stepped(u0, std::vector<double>{t}, F, cfl).front();
}

Field solve_burgers(const Field& u0, double t, const RhsHook* F) {
  if (t == 0.0) return u0;
  require_pre_shock(u0, t);
  if (F == nullptr) return solve_burgers_characteristics(u0, t);
  return solve_burgers_stepped(u0, t, *F);
}

namespace {

int frozen_substeps(const Field& u0, double t, const FrozenOptions& opt) {
  if (opt.substeps > 0) return opt.substeps;
  const double lip = derivative(u0).max_abs();
  return std::max(1, static_cast<int>(std::ceil(t * lip / opt.step_bound)));
}

// RK4 for dY = -u0(Y), dI_k = g_k(tau(sigma), Y). `source_at(stage_sigma)`
// returns the interpolators of every source at that backward time.
template <class SourceAt>
void integrate_backward(const PeriodicInterpolator& U, const Grid& g, double t, int M, std::size_t nsrc,
                        SourceAt&& source_at, Eigen::ArrayXd& Y, std::vector<Eigen::ArrayXd>& I) {
  Y.resize(g.points());
  for (int i = 0; i < g.points(); ++i) Y[i] = g.coordinate(i);
  I.assign(nsrc, Eigen::ArrayXd::Zero(g.points()));
  if (t == 0.0) return;
  const double h = t / M;
  for (int m = 0; m < M; ++m) {
    const double s0 = m * h;
    const Eigen::ArrayXd k1 = -U.evaluate(Y);
    const Eigen::ArrayXd Y2 = Y + 0.5 * h * k1;
    const Eigen::ArrayXd k2 = -U.evaluate(Y2);
    const Eigen::ArrayXd Y3 = Y + 0.5 * h * k2;
    const Eigen::ArrayXd k3 = -U.evaluate(Y3);
    const Eigen::ArrayXd Y4 = Y + h * k3;
    const Eigen::ArrayXd k4 = -U.evaluate(Y4);
    if (nsrc) {
      const auto& g1 = source_at(s0);
      const auto& g2 = source_at(s0 + 0.5 * h);
      const auto& g4 = source_at(s0 + h);
      for (std::size_t k = 0; k < nsrc; ++k) {
        I[k] += h / 6.0 *
                (g1[k].evaluate(Y) + 2.0 * g2[k].evaluate(Y2) + 2.0 * g2[k].evaluate(Y3) + g4[k].evaluate(Y4));
      }
    }
    Y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
}

}  // namespace

FrozenCharacteristics1D::FrozenCharacteristics1D(const Field& u0, double t, std::vector<Field> sources,
                                                 FrozenOptions opt)
    : t_(t), substeps_(0), opt_(opt), grid_(u0.grid()) {
  if (grid_.dim() != 1) throw GridMismatch("frozen characteristics need a 1D field");
  if (t < 0.0) throw ConfigError("negative time requested");
  require_pre_shock(u0, t, opt.margin);
  substeps_ = frozen_substeps(u0, t, opt);
  const PeriodicInterpolator U(u0, opt.interp);
  std::vector<PeriodicInterpolator> G;
  for (const auto& s : sources) {
    require_same_grid(u0, s);
    G.emplace_back(s, opt.interp);
  }
  std::vector<Eigen::ArrayXd> I;
  integrate_backward(U, grid_, t, substeps_, G.size(), [&](double) -> const auto& { return G; }, feet_, I);
  for (auto& a : I) integrals_.emplace_back(grid_, std::move(a));
}

Field FrozenCharacteristics1D::transport(const Field& init) const {
  if (!(init.grid() == grid_)) throw GridMismatch("initial field on another grid");
  if (t_ == 0.0) return init;
  return Field(grid_, PeriodicInterpolator(init, opt_.interp).evaluate(feet_));
}

Field solve_frozen_transport(const Field& u0, const Field& init, double t, FrozenOptions opt) {
  return FrozenCharacteristics1D(u0, t, {}, opt).transport(init);
}

Field solve_frozen_transport(const Field& u0, const Field& init, const Field& source, double t,
                             FrozenOptions opt) {
  const FrozenCharacteristics1D fc(u0, t, {source}, opt);
  return fc.transport(init) + fc.integral(0);
}

Field solve_frozen_transport(const Field& u0, const Field& init, const std::function<Field(double)>& source,
                             double t, FrozenOptions opt) {
  const Grid& g = u0.grid();
  require_pre_shock(u0, t, opt.margin);
  const int M = frozen_substeps(u0, t, opt);
  const PeriodicInterpolator U(u0, opt.interp);
  // Backward time sigma corresponds to forward time t - sigma.
  std::map<double, std::vector<PeriodicInterpolator>> cache;
  auto source_at = [&](double sigma) -> const std::vector<PeriodicInterpolator>& {
    auto it = cache.find(sigma);
    if (it == cache.end()) {
      if (cache.size() > 3) cache.erase(cache.begin());
      std::vector<PeriodicInterpolator> v;
      v.emplace_back(source(t - sigma), opt.interp);
      it = cache.emplace(sigma, std::move(v)).first;
    }
    return it->second;
  };
  Eigen::ArrayXd Y;
  std::vector<Eigen::ArrayXd> I;
  integrate_backward(U, g, t, M, 1, source_at, Y, I);
  const Field moved = t == 0.0 ? init : Field(g, PeriodicInterpolator(init, opt.interp).evaluate(Y));
  return moved + Field(g, std::move(I.front()));
}

Field compose_shifted(const Field& g, const Field& u0, double t, PeriodicInterpolator::Options interp) {
  require_same_grid(g, u0);
  if (t == 0.0) return g;
  const Grid& gr = g.grid();
  Eigen::ArrayXd x(gr.points());
  for (int i = 0; i < gr.points(); ++i) x[i] = gr.coordinate(i) - t * u0[static_cast<std::size_t>(i)];
  return Field(gr, PeriodicInterpolator(g, interp).evaluate(x));
}

Field ap4_closed_form(const Field& u0, int n, double t, PeriodicInterpolator::Options interp) {
  return compose_shifted(dyadic_block(u0, n), u0, t, interp);
}

void CascadeTable::write_csv(const std::filesystem::path& path) const {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path.string());
  os.precision(12);
  os << "t,err_ap1,err_ap2,err_ap3,err_ap4\n";
  for (const auto& r : rows) {
    os << r.t << ',' << r.err_ap1 << ',' << r.err_ap2 << ',' << r.err_ap3 << ',' << r.err_ap4 << '\n';
  }
  os << "#order_ap1," << order[0] << "\n#order_ap2," << order[1] << "\n#order_ap3," << order[2]
     << "\n#order_ap4," << order[3] << "\n#n," << n << "\n#s," << idx.s << "\n#p," << idx.p << "\n#rhs," << rhs
     << '\n';
}

CascadeTable cascade_errors(const Field& u0, int n, std::vector<double> times, const BesovIndex& idx,
                            const RhsHook& F, CascadeOptions opt) {
  CascadeTable tab;
  tab.n = n;
  tab.idx = idx;
  tab.rhs = F.name;
  std::sort(times.begin(), times.end());
  const int jn = opt.norm_j_max >= 0 ? opt.norm_j_max : max_resolved_shell(u0.grid());
  for (double t : times) require_pre_shock(u0, t, opt.frozen.margin);

  std::vector<Field> exact;
  if (F.name == "zero") {
    for (double t : times) exact.push_back(solve_burgers_characteristics(u0, t));
  } else {
    exact = solve_burgers_stepped(u0, times, F);
  }
  const Field source = F.evaluate ? F.evaluate(u0) : Field(u0.grid());
  const Field block = dyadic_block(u0, n);
  const double w = std::pow(2.0, n * idx.s);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const FrozenCharacteristics1D fc(u0, t, {source}, opt.frozen);
    const Field ap2 = fc.transport(u0);
    const Field ap1 = ap2 + fc.integral(0);
    const Field ap3 = fc.transport(block);
    const Field ap4 = ap4_closed_form(u0, n, t, opt.frozen.interp);
    CascadeRow row;
    row.t = t;
    row.err_ap1 = besov_norm(exact[i] - ap1, {idx.s - 1.0, idx.p}, jn);
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

double verify_cosine_lower_bound(const Field& u0, int n, double p, int samples_per_wave) {
  const TimeSequence ts = time_sequence(n);
  const int M = samples_per_wave * static_cast<int>(std::ceil(ts.lambda_n));
  const double h = 2.0 * kPi / M;
  Eigen::ArrayXd x(M);
  for (int k = 0; k < M; ++k) x[k] = (k + 0.5) * h;
  const Eigen::ArrayXd u = PeriodicInterpolator(u0).evaluate(x);
  const Eigen::ArrayXd c = (ts.lambda_n * (x - ts.t_n * u)).cos();
  return lp_norm(c, h, p);
}

double cosine_lower_bound_2d(const std::function<double(double, double)>& f, int n, double p, int N0,
                             int samples_per_wave, int samples_x2) {
  const TimeSequence ts = time_sequence(n);
  const double side = 2.0 * kPi * std::ldexp(1.0, -N0);
  const int M1 = samples_per_wave * static_cast<int>(std::ceil(ts.lambda_n * side / (2.0 * kPi)));
  const double h1 = side / M1, h2 = side / samples_x2;
  Eigen::ArrayXd v(static_cast<Eigen::Index>(M1) * samples_x2);
  Eigen::Index idx = 0;
  for (int a = 0; a < M1; ++a) {
    const double x1 = (a + 0.5) * h1;
    for (int b = 0; b < samples_x2; ++b) {
      const double x2 = (b + 0.5) * h2;
      v[idx++] = std::cos(ts.lambda_n * (x1 - ts.t_n * f(x1, x2)));
    }
  }
  return lp_norm(v, h1 * h2, p);
}

}  // namespace illposed
