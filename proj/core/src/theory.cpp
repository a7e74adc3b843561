#include "monodir/theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace monodir {

constexpr double pi = std::numbers::pi;

namespace {

void check_g_args(double lambda0, double n1, double n2) {
  if (!(lambda0 > 0.0 && lambda0 < 0.5)) throw std::domain_error("G: lambda0 must lie in (0, 1/2)");
  if (std::abs(n1 * n1 + n2 * n2 - 1.0) > 1e-9) throw std::domain_error("G: (n1, n2) must be a unit vector");
}

template <typename F>
double gk(F&& f, double a, double b, double tol = 1e-12, unsigned depth = 20) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, depth, tol, &err);
  if (!std::isfinite(v) || err > 1e-6 * std::abs(v) + 1e-9) {
    throw std::runtime_error("quadrature did not converge (error estimate " + std::to_string(err) + ")");
  }
  return v;
}

void check_band(double lambda_l, int N) {
  if (!(lambda_l > 0.0 && lambda_l < 0.5)) throw std::domain_error("lambda_l must lie in (0, 1/2)");
  if (N <= 0 || N % 2 != 0) throw std::domain_error("N must be even and positive");
}

}  // namespace

double plane_wave_bracket(double lambda) {
  return 4.0 / (pi * pi * lambda) - 4.0 * lambda / 9.0 + 1.0 / 3.0 - 4.0 / (pi * pi);
}

double g_pm(int sign, double lambda0, double n1, double n2) {
  check_g_args(lambda0, n1, n2);
  if (n1 == 0.0) return 0.0;
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double a1 = std::abs(n1);
  const double coef = a1 * (1.0 / (lambda0 * pi * pi) + lambda0 / 3.0 * (2.0 * n2 * n2 - 1.0));
  const double tangents = std::atan(1.0 / (2.0 * lambda0 * a1) + s * n2 / a1) - s * std::atan(n2 / a1);
  const double logs = -s * lambda0 * n1 * n1 * n2 / 3.0 * std::log(1.0 + s * n2 / lambda0 + 1.0 / (4.0 * lambda0 * lambda0));
  return n1 * n1 / 6.0 + coef * tangents + logs;
}

double g_sum(double lambda0, double n1, double n2) {
  check_g_args(lambda0, n1, n2);
  if (n1 == 0.0) return 0.0;
  const double a1 = std::abs(n1);
  const double a = 4.0 * lambda0 / (1.0 + 4.0 * lambda0 * lambda0);
  const double coef = a1 * (1.0 / (lambda0 * pi * pi) + lambda0 / 3.0 * (2.0 * n2 * n2 - 1.0));
  return n1 * n1 / 3.0 + lambda0 * n1 * n1 * n2 / 3.0 * std::log((1.0 - a * n2) / (1.0 + a * n2)) +
         coef * (std::atan(4.0 * lambda0 * a1 / (4.0 * lambda0 * lambda0 - 1.0)) + pi);
}

double g_pm_integrand(int sign, double lambda0, double n1, double n2, double lambda) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double d = lambda0 * n2 + s * lambda;
  const double sinc2 = lambda < 1e-8 ? 1.0 / (pi * pi) : lambda * lambda / std::pow(std::sin(pi * lambda), 2);
  return n1 * n1 / (lambda0 * lambda0 * n1 * n1 + d * d) * sinc2;
}

double g_pm_integrand_taylor(int sign, double lambda0, double n1, double n2, double lambda) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double d = lambda0 * n2 + s * lambda;
  return n1 * n1 / (lambda0 * lambda0 * n1 * n1 + d * d) * (1.0 + pi * pi * lambda * lambda / 3.0) / (pi * pi);
}

double g_pm_quadrature(int sign, double lambda0, double n1, double n2, bool taylor) {
  check_g_args(lambda0, n1, n2);
  if (n1 == 0.0) return 0.0;
  auto f = [&](double l) {
    return taylor ? g_pm_integrand_taylor(sign, lambda0, n1, n2, l) : g_pm_integrand(sign, lambda0, n1, n2, l);
  };
  return gk(f, 0.0, 0.5);
}

double e_u2_planewave(double lambda0, int N) {
  if (!(lambda0 > 0.0 && lambda0 < 0.5)) throw std::domain_error("e_u2_planewave: lambda0 must lie in (0, 1/2)");
  if (N <= 0 || N % 2 != 0) throw std::domain_error("e_u2_planewave: N must be even and positive");
  return plane_wave_bracket(lambda0) / N;
}

double e_u2_unidirectional(const std::function<double(double)>& psd, int N, BandLimits band, QuadRule rule) {
  if (!(band.lambda_l > 0.0 && band.lambda_l < band.lambda_h && band.lambda_h <= 0.5)) {
    throw std::domain_error("e_u2_unidirectional: band must satisfy 0 < lambda_l < lambda_h <= 1/2");
  }
  if (N <= 0 || N % 2 != 0) throw std::domain_error("e_u2_unidirectional: N must be even and positive");
  auto num_f = [&](double l) { return plane_wave_bracket(l) * psd(l); };
  double num = 0.0, den = 0.0;
  if (rule == QuadRule::gauss_kronrod) {
    num = gk(num_f, band.lambda_l, band.lambda_h, 1e-12);
    den = gk(psd, band.lambda_l, band.lambda_h, 1e-12);
  } else {
    boost::math::quadrature::tanh_sinh<double> ts;
    num = ts.integrate(num_f, band.lambda_l, band.lambda_h);
    den = ts.integrate(psd, band.lambda_l, band.lambda_h);
  }
  if (!(den > 0.0)) throw std::domain_error("e_u2_unidirectional: PSD integrates to zero");
  return num / den / N;
}

double lemma_deficit_sum(double lambda0, double nu, int N) {
  if (N <= 0 || N % 2 != 0) throw std::domain_error("lemma_deficit_sum: N must be even and positive");
  const double n1 = std::cos(nu), n2 = std::sin(nu);
  const double dN = N;
  auto D = [&](double x) {
    const double s = std::sin(pi * x);
    if (std::abs(s) < 1e-14) return dN * dN;
    const double t = std::sin(pi * dN * x);
    return t * t / (s * s);
  };
  double acc = 0.0;
  for (int i2 = -N / 2; i2 < N / 2; ++i2) {
    const double l2 = i2 == -N / 2 ? 0.5 : i2 / dN;
    const double d2 = D(lambda0 * n2 - l2);
    for (int i1 = -N / 2; i1 < N / 2; ++i1) {
      if (i1 == 0 && i2 == 0) continue;
      const double l1 = i1 == -N / 2 ? 0.5 : i1 / dN;
      const double cross = l1 * n2 - l2 * n1;
      acc += cross * cross / (l1 * l1 + l2 * l2) * D(lambda0 * n1 - l1) * d2;
    }
  }
  return 2.0 * acc / std::pow(dN, 4);
}

double u2_bound(double lambda_l, int N) {
  check_band(lambda_l, N);
  return plane_wave_bracket(lambda_l) / N;
}

PfaBound pfa_bound(double eta, double lambda_l, int N) {
  if (!(eta > 0.0)) throw std::domain_error("pfa_bound: eta must be positive");
  check_band(lambda_l, N);
  const double v = plane_wave_bracket(lambda_l) / (N * eta);
  return {v, v >= 1.0};
}

ThresholdResult threshold_for_epsilon(double epsilon, double lambda_l, int N) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("threshold_for_epsilon: epsilon must lie in (0, 1)");
  ThresholdResult r;
  r.eta = u2_bound(lambda_l, N) / epsilon;
  if (r.eta < 1.0) r.threshold = 1.0 - r.eta;
  return r;
}

double inverse_hankel(const std::function<double(double)>& S, int order, double xi, double k_max) {
  if (order != 0 && order != 1) throw std::invalid_argument("inverse_hankel: order must be 0 or 1");
  if (!(k_max > 0.0)) throw std::invalid_argument("inverse_hankel: k_max must be positive");
  auto f = [&](double k) { return S(k) * std::cyl_bessel_j(static_cast<double>(order), k * xi) * k; };
  return gk(f, 0.0, k_max, 1e-13, 25);
}

IsotropicCov isotropic_covariances(const std::function<double(double)>& S, double xi, double theta, double k_max) {
  const double h0 = inverse_hankel(S, 0, xi, k_max);
  const double h1 = inverse_hankel(S, 1, xi, k_max);
  // (1/xi) int S(k) J1(k xi) dk, with its xi -> 0 limit H0 / 2.
  double h1k_over_xi = 0.0;
  if (xi == 0.0) {
    h1k_over_xi = 0.5 * h0;
  } else {
    auto f = [&](double k) { return S(k) * std::cyl_bessel_j(1.0, k * xi); };
    h1k_over_xi = gk(f, 0.0, k_max, 1e-13, 25) / xi;
  }
  const double c = std::cos(theta), s = std::sin(theta);
  const double c2t = std::cos(2.0 * theta), s2t = std::sin(2.0 * theta);
  IsotropicCov r;
  r.rff = 2.0 * pi * h0;
  r.rgg = 2.0 * pi * c * c * h0 - 2.0 * pi * c2t * h1k_over_xi;
  r.rhh = 2.0 * pi * s * s * h0 + 2.0 * pi * c2t * h1k_over_xi;
  r.rfg = -2.0 * pi * c * h1;
  r.rfh = -2.0 * pi * s * h1;
  r.rgh = s2t * (pi * h0 - 2.0 * pi * h1k_over_xi);
  return r;
}

}  // namespace monodir
