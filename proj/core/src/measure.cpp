#include "monodir/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monodir {

namespace {

double reduce_axial(double th) {
  th = std::fmod(th, std::numbers::pi);
  if (th < 0.0) th += std::numbers::pi;
  if (th >= std::numbers::pi) th -= std::numbers::pi;
  return th;
}

}  // namespace

DirectionalityResult unidirectionality(const CovZero& c) {
  if (!(c.rff > 0.0)) throw std::domain_error("unidirectionality: degenerate field (rff = 0)");
  const RMatrix R = r_matrix(c);
  const auto [lmax, lmin] = R.eigenvalues();
  const double re_rmm = c.rff + c.rgg + c.rhh;

  DirectionalityResult out;
  out.cov = c;
  out.lambda_max = lmax;
  out.lambda_min = lmin;
  out.u_hat = std::max(0.0, 2.0 * lmax / re_rmm - 1.0);
  if (lmax - lmin >= 1e-12 * c.rff) out.angle = R.dominant_angle();
  return out;
}

DirectionalityResult unidirectionality(const MonogenicGrid& m) { return unidirectionality(cov_zero(m)); }

DirectionalityResult measure_field(const RealGrid& field) { return unidirectionality(monogenic(field)); }

double coherency_index(const CovZero& c) {
  const double tr = c.rgg + c.rhh;
  if (!(tr > 0.0)) throw std::domain_error("coherency_index: zero trace");
  return std::hypot(c.rgg - c.rhh, 2.0 * c.rgh) / tr;
}

double coherency_index(const MonogenicGrid& m) { return coherency_index(cov_zero(m)); }

std::optional<double> tensor_direction(const RealGrid& f) {
  const std::size_t n = f.n();
  if (n < 4) throw GridError("tensor_direction: need n >= 4");
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t rp = (r + 1) % n, rm = (r + n - 1) % n;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t cp = (c + 1) % n, cm = (c + n - 1) % n;
      const double gx = 0.5 * (f(r, cp) - f(r, cm));
      const double gy = 0.5 * (f(rp, c) - f(rm, c));
      sxx += gx * gx;
      sxy += gx * gy;
      syy += gy * gy;
    }
  }
  const double disc = std::hypot(0.5 * (sxx - syy), sxy);
  const double scale = sxx + syy;
  if (!(scale > 0.0) || disc <= 1e-12 * scale) return std::nullopt;
  const double dominant = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  return reduce_axial(dominant + 0.5 * std::numbers::pi);
}

std::optional<double> tensor_variation_direction(const RealGrid& f) {
  const auto t = tensor_direction(f);
  if (!t) return std::nullopt;
  return reduce_axial(*t + 0.5 * std::numbers::pi);
}

double axial_difference(double a, double b) {
  const double d = reduce_axial(a - b);
  return std::min(d, std::numbers::pi - d);
}

}  // namespace monodir
