#pragma once

#include <functional>
#include <optional>

// Finite-sample approximations for E[U2] = E[1 - U_hat], the Markov-type
// false-alarm bound and the detection threshold, plus Hankel-transform
// covariances of isotropic fields. All E[U2] expressions keep only the 1/N
// term; the O(1/N^2) remainder is dropped.
namespace monodir {

/// 4/(pi^2 lambda) - 4 lambda / 9 + 1/3 - 4/pi^2.
double plane_wave_bracket(double lambda);

/// Closed-form approximation of G+(sign = +1) or G-(sign = -1). Requires
/// n1^2 + n2^2 = 1 and lambda0 in (0, 1/2); returns 0 when n1 = 0.
double g_pm(int sign, double lambda0, double n1, double n2);
/// G+ + G- in arctan-combination form, principal branch plus pi.
double g_sum(double lambda0, double n1, double n2);

/// n1^2 / (lambda0^2 n1^2 + (lambda0 n2 + sign lambda)^2) * lambda^2 / sin^2(pi lambda)
double g_pm_integrand(int sign, double lambda0, double n1, double n2, double lambda);
/// Same integrand with lambda^2 / sin^2(pi lambda) replaced by its second-order
/// expansion (1 + pi^2 lambda^2 / 3) / pi^2.
double g_pm_integrand_taylor(int sign, double lambda0, double n1, double n2, double lambda);

/// Adaptive Gauss-Kronrod integral of the integrand over [0, 1/2].
double g_pm_quadrature(int sign, double lambda0, double n1, double n2, bool taylor = false);

/// E[U2] for a random plane wave: plane_wave_bracket(lambda0) / N.
double e_u2_planewave(double lambda0, int N);

struct BandLimits {
  double lambda_l = 0.05;
  double lambda_h = 0.5;
};

enum class QuadRule { gauss_kronrod, tanh_sinh };

/// (1/N) int B(l) S(l) dl / int S(l) dl over the band.
double e_u2_unidirectional(const std::function<double(double)>& psd, int N, BandLimits band,
                           QuadRule rule = QuadRule::gauss_kronrod);

/// Lattice sum of C(l1, l2) for a plane wave of frequency lambda0 along nu on
/// an N x N grid, averaged over phase. Nyquist bins use lambda = +1/2.
double lemma_deficit_sum(double lambda0, double nu, int N);

double u2_bound(double lambda_l, int N);

struct PfaBound {
  double value = 0.0;
  bool vacuous = false;  // value >= 1
};

PfaBound pfa_bound(double eta, double lambda_l, int N);

struct ThresholdResult {
  std::optional<double> threshold;  // 1 - eta, absent when undecidable
  double eta = 0.0;
  bool decidable() const { return threshold.has_value(); }
};

ThresholdResult threshold_for_epsilon(double epsilon, double lambda_l, int N);

/// int_0^k_max S(k) J_order(k xi) k dk, order in {0, 1}.
double inverse_hankel(const std::function<double(double)>& S, int order, double xi, double k_max = 3.141592653589793);

struct IsotropicCov {
  double rff = 0.0, rgg = 0.0, rhh = 0.0;
  double rfg = 0.0, rfh = 0.0, rgh = 0.0;
};

/// Covariances at lag xi (cos theta, sin theta) of an isotropic field with
/// radial spectrum S(|k|), k in radians/sample. r_ab(xi) = E a(x) b(x - xi).
IsotropicCov isotropic_covariances(const std::function<double(double)>& S, double xi, double theta,
                                   double k_max = 3.141592653589793);

}  // namespace monodir
