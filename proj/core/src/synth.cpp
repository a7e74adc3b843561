#include "monodir/synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "monodir/fft.hpp"
#include "monodir/riesz.hpp"

namespace monodir {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

std::mt19937_64 make_rng(Seed seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.master), static_cast<std::uint32_t>(seed.master >> 32),
                    static_cast<std::uint32_t>(seed.stream), static_cast<std::uint32_t>(seed.stream >> 32)};
  return std::mt19937_64(seq);
}

void validate(const MaternParams& p) {
  if (!(p.nu > 0.0)) throw std::invalid_argument("matern: smoothness must be positive");
  if (!(p.rho > 0.0)) throw std::invalid_argument("matern: range must be positive");
  if (!(p.sigma2 >= 0.0)) throw std::invalid_argument("matern: variance must be non-negative");
  if (!(p.lambda0 >= 0.0 && p.lambda0 < 0.5)) throw std::invalid_argument("matern: lambda0 must lie in [0, 1/2)");
}

void validate(const ShiftedMatern& s) {
  validate(s.params);
  const auto& D = s.D;
  if (std::abs(D[1] - D[2]) > 1e-12) throw std::invalid_argument("matern: D must be symmetric");
  if (!(D[0] > 0.0) || std::abs(D[0] * D[3] - D[1] * D[2] - 1.0) > 1e-9) {
    throw std::invalid_argument("matern: D must be positive definite with unit determinant");
  }
}

void validate(const Unidirectional1D& s) {
  validate(s.params);
  if (!(s.band_lo > 0.0 && s.band_lo < s.band_hi && s.band_hi <= 0.5)) {
    throw std::invalid_argument("unidirectional: band must satisfy 0 < lo < hi <= 1/2");
  }
}

void validate(const PlaneWave& s) {
  if (!(s.lambda0 > 0.0 && s.lambda0 < 0.5)) throw std::invalid_argument("plane wave: lambda0 must lie in (0, 1/2)");
  if (!std::isfinite(s.amplitude)) throw std::invalid_argument("plane wave: amplitude must be finite");
}

double matern_psd(const MaternParams& p, double r) {
  validate(p);
  const double nu = p.nu;
  const double pr = pi * p.rho;
  const double c = p.sigma2 * std::tgamma(nu + 1.0) * std::pow(4.0 * nu, nu) /
                   (pi * std::tgamma(nu) * std::pow(pr, 2.0 * nu));
  const double q = 4.0 * nu / (pr * pr) + (r - p.lambda0) * (r - p.lambda0);
  return c / std::pow(q, nu + 1.0);
}

double matern_psd(const ShiftedMatern& s, double l1, double l2) {
  const auto& D = s.D;
  const double quad = D[0] * l1 * l1 + (D[1] + D[2]) * l1 * l2 + D[3] * l2 * l2;
  return matern_psd(s.params, std::sqrt(std::max(0.0, quad)));
}

std::array<double, 4> anisotropic_d() {
  const double s = std::sqrt(0.2775);
  return {1.0 / s, 0.85 / s, 0.85 / s, 1.0 / s};
}

namespace {

template <typename Psd>
RealGrid filter_white_noise(Psd&& psd, std::size_t n, Seed seed) {
  if (n == 0 || n % 2 != 0) throw GridError("synthesis: n must be even and positive");
  auto rng = make_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> w(n * n);
  for (auto& v : w) v = gauss(rng);
  fft::forward_2d(w, n);

  const double dn = static_cast<double>(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t rp = (n - r) % n;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t cp = (n - c) % n;
      const double s = psd(bin_index(c, n) / dn, bin_index(r, n) / dn);
      const double sp = psd(bin_index(cp, n) / dn, bin_index(rp, n) / dn);
      w[r * n + c] *= std::sqrt(0.5 * (s + sp));
    }
  }
  fft::inverse_2d(w, n);

  std::vector<double> out(n * n);
  double re_max = 0.0, im_max = 0.0;
  for (std::size_t i = 0; i < n * n; ++i) {
    out[i] = w[i].real();
    re_max = std::max(re_max, std::abs(w[i].real()));
    im_max = std::max(im_max, std::abs(w[i].imag()));
  }
  if (im_max > 1e-10 * std::max(1.0, re_max)) {
    throw FftConfigError("synthesis: imaginary residue " + std::to_string(im_max) + " exceeds tolerance");
  }
  return RealGrid(n, std::move(out));
}

struct Comb {
  double direction = 0.0;
  double f0 = 0.0;     // carrier, lo + delta / 2
  double delta = 0.0;  // comb spacing
  std::vector<cplx> c;  // A_m exp(i phi_m)
};

Comb make_comb(const Unidirectional1D& spec, std::size_t n, std::mt19937_64& rng) {
  validate(spec);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Comb comb;
  comb.direction = spec.direction ? *spec.direction : pi * unif(rng);
  const std::size_t M = 4 * n;
  comb.delta = (spec.band_hi - spec.band_lo) / static_cast<double>(M);
  comb.f0 = spec.band_lo + 0.5 * comb.delta;
  comb.c.resize(M);
  for (std::size_t m = 0; m < M; ++m) {
    const double lm = spec.band_lo + (static_cast<double>(m) + 0.5) * comb.delta;
    const double amp = std::sqrt(2.0 * matern_psd(spec.params, lm) * comb.delta);
    comb.c[m] = std::polar(amp, 2.0 * pi * unif(rng));
  }
  return comb;
}

}  // namespace

RealGrid gen_field_2d(const ShiftedMatern& spec, std::size_t n, Seed seed) {
  validate(spec);
  return filter_white_noise([&](double l1, double l2) { return matern_psd(spec, l1, l2); }, n, seed);
}

RealGrid gen_field_2d(const SeparableMatern& spec, std::size_t n, Seed seed) {
  validate(spec.x1);
  validate(spec.x2);
  return filter_white_noise(
      [&](double l1, double l2) { return matern_psd(spec.x1, std::abs(l1)) * matern_psd(spec.x2, std::abs(l2)); }, n,
      seed);
}

RealGrid gen_unidirectional(const Unidirectional1D& spec, std::size_t n, Seed seed) {
  if (n == 0 || n % 2 != 0) throw GridError("synthesis: n must be even and positive");
  auto rng = make_rng(seed);
  const Comb comb = make_comb(spec, n, rng);
  const std::size_t M = comb.c.size();

  // Q(t) = sum_m c_m exp(i 2 pi m delta t) has period T = 1/delta. Sample it
  // on P points (spacing h <= 1/32) with one inverse FFT, then interpolate.
  const double T = 1.0 / comb.delta;
  const std::size_t P = std::bit_ceil(std::max<std::size_t>(2 * M, static_cast<std::size_t>(std::ceil(32.0 * T))));
  std::vector<cplx> q(P);
  std::copy(comb.c.begin(), comb.c.end(), q.begin());
  fft::backward_1d(q);
  const double h = T / static_cast<double>(P);

  const double cn = std::cos(comb.direction), sn = std::sin(comb.direction);
  const long Pl = static_cast<long>(P);
  std::vector<double> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      const double t = cn * static_cast<double>(col) + sn * static_cast<double>(r);
      const double u = t / h;
      const double fl = std::floor(u);
      const double x = u - fl;
      const long i0 = static_cast<long>(fl);
      // 6-point Lagrange on nodes -2..3.
      const double xm2 = x + 2, xm1 = x + 1, x0 = x, x1 = x - 1, x2 = x - 2, x3 = x - 3;
      const double w[6] = {
          xm1 * x0 * x1 * x2 * x3 / -120.0, xm2 * x0 * x1 * x2 * x3 / 24.0, xm2 * xm1 * x1 * x2 * x3 / -12.0,
          xm2 * xm1 * x0 * x2 * x3 / 12.0,  xm2 * xm1 * x0 * x1 * x3 / -24.0, xm2 * xm1 * x0 * x1 * x2 / 120.0,
      };
      cplx acc = 0.0;
      for (int k = 0; k < 6; ++k) {
        long idx = (i0 - 2 + k) % Pl;
        if (idx < 0) idx += Pl;
        acc += w[k] * q[static_cast<std::size_t>(idx)];
      }
      out[r * n + col] = (std::polar(1.0, 2.0 * pi * comb.f0 * t) * acc).real();
    }
  }
  return RealGrid(n, std::move(out));
}

RealGrid gen_unidirectional_direct(const Unidirectional1D& spec, std::size_t n, Seed seed) {
  if (n == 0 || n % 2 != 0) throw GridError("synthesis: n must be even and positive");
  auto rng = make_rng(seed);
  const Comb comb = make_comb(spec, n, rng);
  const double cn = std::cos(comb.direction), sn = std::sin(comb.direction);
  std::vector<double> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      const double t = cn * static_cast<double>(col) + sn * static_cast<double>(r);
      double s = 0.0;
      for (std::size_t m = 0; m < comb.c.size(); ++m) {
        const double lm = comb.f0 + static_cast<double>(m) * comb.delta;
        s += std::abs(comb.c[m]) * std::cos(2.0 * pi * lm * t + std::arg(comb.c[m]));
      }
      out[r * n + col] = s;
    }
  }
  return RealGrid(n, std::move(out));
}

RealGrid gen_plane_wave(double amplitude, double lambda0, std::size_t n, Seed seed, std::optional<double> phase,
                        std::optional<double> direction) {
  return gen_plane_wave(PlaneWave{amplitude, lambda0, phase, direction}, n, seed);
}

RealGrid gen_plane_wave(const PlaneWave& spec, std::size_t n, Seed seed) {
  validate(spec);
  if (n == 0 || n % 2 != 0) throw GridError("synthesis: n must be even and positive");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double nu = spec.direction ? *spec.direction : pi * unif(rng);
  const double phi = spec.phase ? *spec.phase : 2.0 * pi * unif(rng);
  const double k0 = 2.0 * pi * spec.lambda0;
  const double cn = std::cos(nu), sn = std::sin(nu);
  std::vector<double> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out[r * n + c] = spec.amplitude * std::cos(k0 * (cn * static_cast<double>(c) + sn * static_cast<double>(r)) + phi);
    }
  }
  return RealGrid(n, std::move(out));
}

RealGrid generate(const PsdSpec& spec, std::size_t n, Seed seed) {
  return std::visit(
      [&](const auto& s) -> RealGrid {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Unidirectional1D>) {
          return gen_unidirectional(s, n, seed);
        } else if constexpr (std::is_same_v<T, PlaneWave>) {
          return gen_plane_wave(s, n, seed);
        } else {
          return gen_field_2d(s, n, seed);
        }
      },
      spec);
}

double beta_fn(double sigma1, double alpha, double kappa, bool reflection) {
  if (!(sigma1 > 0.0)) throw std::invalid_argument("beta_fn: sigma1 must be positive");
  const double c = std::cos(kappa), s = std::sin(kappa);
  const double c2 = c * c, s2 = s * s;
  const double sign = reflection ? 1.0 : -1.0;
  const double num = std::cos(alpha) * c * std::sqrt(sigma1 * sigma1 * c2 + s2) +
                     sign * std::sin(alpha) * s * std::sqrt(c2 + s2 / (sigma1 * sigma1));
  return num / (sigma1 * c2 + s2 / sigma1);
}

std::vector<cplx> beta_coeffs(double sigma1, double alpha, int L, std::size_t nodes, bool reflection) {
  if (L < 0) throw std::invalid_argument("beta_coeffs: L must be non-negative");
  if (nodes < 4096) nodes = 4096;
  std::vector<double> samples(nodes);
  const double step = 2.0 * pi / static_cast<double>(nodes);
  for (std::size_t q = 0; q < nodes; ++q) samples[q] = beta_fn(sigma1, alpha, -pi + step * static_cast<double>(q), reflection);
  std::vector<cplx> a(2 * static_cast<std::size_t>(L) + 1);
  for (int l = -L; l <= L; ++l) {
    cplx acc = 0.0;
    for (std::size_t q = 0; q < nodes; ++q) {
      acc += samples[q] * std::polar(1.0, -static_cast<double>(l) * (-pi + step * static_cast<double>(q)));
    }
    a[static_cast<std::size_t>(l + L)] = acc / static_cast<double>(nodes);
  }
  return a;
}

}  // namespace monodir
