#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "monodir/grid.hpp"

namespace monodir {

/// Matern parameters: variance, smoothness, range and centre frequency (cycles/sample).
struct MaternParams {
  double sigma2 = 1.0;
  double nu = 1.5;
  double rho = 20.0;
  double lambda0 = 0.1;
};

/// S(lambda) with radius sqrt(lambda^T D lambda). D is symmetric positive definite, det 1,
/// stored row-major.
struct ShiftedMatern {
  MaternParams params;
  std::array<double, 4> D{1.0, 0.0, 0.0, 1.0};
};

/// Ridge field s(n^T x) with a 1D Matern spectrum restricted to [band_lo, band_hi].
struct Unidirectional1D {
  MaternParams params;
  std::optional<double> direction;  // radians; nullopt draws U[0, pi)
  double band_lo = 0.05;
  double band_hi = 0.5;
};

struct PlaneWave {
  double amplitude = 1.0;
  double lambda0 = 0.125;
  std::optional<double> phase;      // nullopt draws U[0, 2 pi)
  std::optional<double> direction;  // nullopt draws U[0, pi)
};

/// S(lambda) = S_1(|lambda_1|) S_2(|lambda_2|).
struct SeparableMatern {
  MaternParams x1;
  MaternParams x2;
};

using PsdSpec = std::variant<ShiftedMatern, Unidirectional1D, PlaneWave, SeparableMatern>;

struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;
};

std::mt19937_64 make_rng(Seed seed);

/// Matern PSD as a function of the (possibly D-weighted) radius r.
double matern_psd(const MaternParams& p, double r);
double matern_psd(const ShiftedMatern& s, double l1, double l2);

/// D = [[1, .85], [.85, 1]] / sqrt(0.2775), det 1.
std::array<double, 4> anisotropic_d();

void validate(const MaternParams& p);
void validate(const ShiftedMatern& s);
void validate(const Unidirectional1D& s);
void validate(const PlaneWave& s);

RealGrid gen_field_2d(const ShiftedMatern& spec, std::size_t n, Seed seed);
RealGrid gen_field_2d(const SeparableMatern& spec, std::size_t n, Seed seed);
RealGrid gen_unidirectional(const Unidirectional1D& spec, std::size_t n, Seed seed);
RealGrid gen_plane_wave(double amplitude, double lambda0, std::size_t n, Seed seed,
                        std::optional<double> phase = std::nullopt, std::optional<double> direction = std::nullopt);
RealGrid gen_plane_wave(const PlaneWave& spec, std::size_t n, Seed seed);
RealGrid generate(const PsdSpec& spec, std::size_t n, Seed seed);

/// Reference ridge-field evaluation by direct summation over the comb (O(n^2 M)).
RealGrid gen_unidirectional_direct(const Unidirectional1D& spec, std::size_t n, Seed seed);

/// Anisotropy function beta(sigma1, alpha) at polar angle kappa. `reflection`
/// selects the + branch used when D's eigenvector matrix has determinant -1.
double beta_fn(double sigma1, double alpha, double kappa, bool reflection = false);
/// a_l for l = -L..L (index l + L) by the trapezoid rule on `nodes` points.
std::vector<std::complex<double>> beta_coeffs(double sigma1, double alpha, int L, std::size_t nodes = 4096,
                                              bool reflection = false);

std::string spec_to_json(const PsdSpec& spec);
PsdSpec spec_from_json(const std::string& text);

}  // namespace monodir
