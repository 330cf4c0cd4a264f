#include "illposed/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace illposed {

namespace {

struct PlanCache {
  std::mutex mu;
  std::map<std::tuple<int, int, bool>, fftw_plan> plans;

  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }

  fftw_plan get(int dim, int n, bool forward) {
    std::lock_guard lock(mu);
    auto key = std::make_tuple(dim, n, forward);
    if (auto it = plans.find(key); it != plans.end()) return it->second;
    // ESTIMATE never touches the arrays, so scratch buffers are enough.
    const std::size_t real_size = dim == 1 ? n : static_cast<std::size_t>(n) * n;
    const std::size_t cplx_size = dim == 1 ? n / 2 + 1 : static_cast<std::size_t>(n) * (n / 2 + 1);
    double* r = fftw_alloc_real(real_size);
    fftw_complex* c = fftw_alloc_complex(cplx_size);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan p;
    if (dim == 1) {
      p = forward ? fftw_plan_dft_r2c_1d(n, r, c, flags) : fftw_plan_dft_c2r_1d(n, c, r, flags);
    } else {
      p = forward ? fftw_plan_dft_r2c_2d(n, n, r, c, flags) : fftw_plan_dft_c2r_2d(n, n, c, r, flags);
    }
    fftw_free(r);
    fftw_free(c);
    plans.emplace(key, p);
    return p;
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

Eigen::ArrayXcd forward_dft(const Grid& grid, const Eigen::ArrayXd& samples) {
  fftw_plan p = cache().get(grid.dim(), grid.points(), true);
  Eigen::ArrayXd in = samples;
  Eigen::ArrayXcd out(static_cast<Eigen::Index>(grid.spectral_size()));
  fftw_execute_dft_r2c(p, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

Eigen::ArrayXd inverse_dft(const Grid& grid, const Eigen::ArrayXcd& spectrum) {
  fftw_plan p = cache().get(grid.dim(), grid.points(), false);
  Eigen::ArrayXcd in = spectrum;  // c2r overwrites its input
  Eigen::ArrayXd out(static_cast<Eigen::Index>(grid.size()));
  fftw_execute_dft_c2r(p, reinterpret_cast<fftw_complex*>(in.data()), out.data());
  out /= static_cast<double>(grid.size());
  return out;
}

}  // namespace illposed
