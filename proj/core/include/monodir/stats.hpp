#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "monodir/grid.hpp"
#include "monodir/quaternion.hpp"
#include "monodir/riesz.hpp"

namespace monodir {

/// Lag-0 sample second moments of a monogenic grid.
struct CovZero {
  double rff = 0.0;
  double rgg = 0.0;
  double rhh = 0.0;
  double rgh = 0.0;
};

/// Sample moments (1/n^2) sum a b. Riesz channels include their Nyquist imaginary part,
/// i.e. rgg = mean |g|^2 and rgh = mean Re(g conj h).
CovZero cov_zero(const MonogenicGrid& m);

/// Same quantities from a single real FFT of the mean-removed field:
/// (1/n^4) sum_k w(k) |F(k)|^2 with w in {1, k1^2/|k|^2, k2^2/|k|^2, k1 k2/|k|^2}.
CovZero spectral_cov_zero(const RealGrid& field);

struct RMatrix {
  double a = 0.0;  // rff + rgg - rhh
  double b = 0.0;  // 2 rgh
  double d = 0.0;  // rff - rgg + rhh

  double trace() const { return a + d; }
  /// Eigenvalues (max, min).
  std::pair<double, double> eigenvalues() const;
  /// Angle of the dominant eigenvector in [0, pi).
  double dominant_angle() const;
};

RMatrix r_matrix(const CovZero& c);

struct QuatCov {
  Quaternion rmm;   // mean m m*
  Quaternion rmmi;  // mean m m^(i)*
  Quaternion rmmj;  // mean m m^(j)*
};

QuatCov quat_cov_zero(const MonogenicGrid& m);

/// Circular lag (d1 along x1 / columns, d2 along x2 / rows).
struct Lag {
  long d1 = 0;
  long d2 = 0;
};

/// r_ab(xi) = (1/n^2) sum_x a(x) b(x - xi), periodic, by direct summation.
double cross_cov_direct(const RealGrid& a, const RealGrid& b, Lag xi);
/// All lags at once via the FFT. Result is indexed [d2 * n + d1] with d in [0, n).
RealGrid cross_cov_fft(const RealGrid& a, const RealGrid& b);

/// Real-part quaternion signal m = f + i g + j h.
std::vector<Quaternion> quaternion_signal(const MonogenicGrid& m);

/// r_{m q}(xi) = (1/n^2) sum_x m(x) conj(q(x - xi)) for quaternion grids.
Quaternion quat_cross_cov(const std::vector<Quaternion>& m, const std::vector<Quaternion>& q, std::size_t n,
                          Lag xi);
/// Same for every lag, via 16 real FFT correlations. Indexed [d2 * n + d1].
std::vector<Quaternion> quat_cross_cov_all(const std::vector<Quaternion>& m, const std::vector<Quaternion>& q,
                                           std::size_t n);

inline constexpr std::array<Lag, 5> kProprietyLags{{{0, 0}, {1, 0}, {0, 1}, {2, 3}, {5, 5}}};

/// RMS over kProprietyLags of |r_{m m^(eta')}(xi)|, divided by Re r_mm(0),
/// with eta' = -sin(nu) i + cos(nu) j. Near 0 for a field proper in the
/// basis built on eta = cos(nu) i + sin(nu) j.
double propriety_defect(const MonogenicGrid& m, double nu);
/// Audit variant aggregating over all n^2 circular lags.
double propriety_defect_all_lags(const MonogenicGrid& m, double nu);

}  // namespace monodir
