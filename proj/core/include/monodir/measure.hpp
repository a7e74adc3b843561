#pragma once

#include <optional>

#include "monodir/grid.hpp"
#include "monodir/riesz.hpp"
#include "monodir/stats.hpp"

namespace monodir {

struct DirectionalityResult {
  double u_hat = 0.0;
  std::optional<double> angle;  // radians in [0, pi)
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  CovZero cov;
};

/// u_hat = 2 lambda_max(R) / Re r_mm(0) - 1, angle from the dominant eigenvector of R.
/// Throws std::domain_error when rff = 0.
DirectionalityResult unidirectionality(const CovZero& c);
DirectionalityResult unidirectionality(const MonogenicGrid& m);
/// Convenience: monogenic + cov_zero + unidirectionality.
DirectionalityResult measure_field(const RealGrid& field);

/// (lmax - lmin) / (lmax + lmin) of J = [[rgg, rgh], [rgh, rhh]].
double coherency_index(const CovZero& c);
double coherency_index(const MonogenicGrid& m);

/// Structure tensor from periodic central differences. Returns the angle of
/// the minimum-eigenvalue eigenvector (direction of least variation) in
/// [0, pi), or nullopt when the tensor is isotropic.
std::optional<double> tensor_direction(const RealGrid& f);

/// Direction of greatest variation, tensor_direction + pi/2 mod pi. Comparable
/// with DirectionalityResult::angle.
std::optional<double> tensor_variation_direction(const RealGrid& f);

/// Smallest absolute difference between two axial angles (mod pi).
double axial_difference(double a, double b);

}  // namespace monodir
