#include "monodir/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "monodir/fft.hpp"

namespace monodir {

using cplx = std::complex<double>;

long bin_index(std::size_t idx, std::size_t n) {
  const long i = static_cast<long>(idx);
  const long half = static_cast<long>(n / 2);
  return i < half ? i : i - static_cast<long>(n);
}

double wavenumber(long l, std::size_t n) {
  const long half = static_cast<long>(n / 2);
  if (l == -half) return std::numbers::pi;
  return 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(n);
}

RieszKernels riesz_kernels(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw GridError("riesz_kernels: n must be even and positive");
  RieszKernels k{n, std::vector<cplx>(n * n), std::vector<cplx>(n * n)};
  for (std::size_t r = 0; r < n; ++r) {
    const double k2 = wavenumber(bin_index(r, n), n);
    for (std::size_t c = 0; c < n; ++c) {
      const double k1 = wavenumber(bin_index(c, n), n);
      const double mag = std::hypot(k1, k2);
      if (mag == 0.0) continue;
      k.k1[r * n + c] = cplx(0.0, -k1 / mag);
      k.k2[r * n + c] = cplx(0.0, -k2 / mag);
    }
  }
  return k;
}

MonogenicGrid monogenic(const RealGrid& field) {
  const std::size_t n = field.n();
  RealGrid f = remove_mean(field);

  std::vector<cplx> spec(f.data().begin(), f.data().end());
  fft::forward_2d(spec, n);

  std::vector<cplx> g(n * n), h(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const double k2 = wavenumber(bin_index(r, n), n);
    for (std::size_t c = 0; c < n; ++c) {
      const double k1 = wavenumber(bin_index(c, n), n);
      const double mag = std::hypot(k1, k2);
      const std::size_t i = r * n + c;
      if (mag == 0.0) continue;
      // (-i k / |k|) * F
      const cplx F = spec[i];
      g[i] = cplx(F.imag(), -F.real()) * (k1 / mag);
      h[i] = cplx(F.imag(), -F.real()) * (k2 / mag);
    }
  }
  fft::inverse_2d(g, n);
  fft::inverse_2d(h, n);

  double fmax = 0.0;
  for (double v : f.data()) fmax = std::max(fmax, std::abs(v));
  const double tol = 1e-9 * fmax;

  std::vector<double> gr(n * n), hr(n * n), gi(n * n), hi(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    gr[i] = g[i].real();
    hr[i] = h[i].real();
    gi[i] = g[i].imag();
    hi[i] = h[i].imag();
  }

  // g_im (-1)^{x1} must not depend on x1, h_im (-1)^{x2} must not depend on x2.
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const double g0 = gi[r * n];
    for (std::size_t c = 0; c < n; ++c) {
      const double sc = (c % 2 == 0) ? 1.0 : -1.0;
      worst = std::max(worst, std::abs(sc * gi[r * n + c] - g0));
      const double sr = (r % 2 == 0) ? 1.0 : -1.0;
      worst = std::max(worst, std::abs(sr * hi[r * n + c] - hi[c]));
    }
  }
  if (worst > tol) {
    throw FftConfigError("monogenic: imaginary residue " + std::to_string(worst) +
                         " outside the Nyquist lines exceeds tolerance");
  }

  return MonogenicGrid{std::move(f), RealGrid(n, std::move(gr)), RealGrid(n, std::move(hr)),
                       RealGrid(n, std::move(gi)), RealGrid(n, std::move(hi))};
}

}  // namespace monodir
