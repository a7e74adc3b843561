#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "monodir/grid.hpp"
#include "monodir/measure.hpp"
#include "monodir/theory.hpp"

namespace monodir {

struct DetectorConfig {
  double epsilon = 0.05;   // false-alarm budget, (0, 1)
  double lambda_l = 0.05;  // lower cutoff frequency, (0, 1/2)
};

enum class Decision { unidirectional, not_unidirectional, undecidable };

std::string_view to_string(Decision d);

struct Detection {
  double u_hat = 0.0;
  std::optional<double> threshold;
  Decision decision = Decision::undecidable;
  std::optional<double> angle;
  double eta = 0.0;
};

void validate(const DetectorConfig& cfg);

/// Threshold test on an already measured field of side n.
Detection decide(const DirectionalityResult& r, std::size_t n, const DetectorConfig& cfg);
Detection detect(const RealGrid& field, const DetectorConfig& cfg);

/// Lowest radial frequency at which the cumulative radial periodogram reaches
/// `fraction` of the total power. Advisory only; detect() never calls it.
double estimate_lambda_l(const RealGrid& field, double fraction = 0.01);

/// Periodogram power summed over annuli of width 1/n, as a piecewise-constant
/// function of radial frequency on [0, 1/2]. Suitable as the `psd` argument of
/// e_u2_unidirectional; no smoothing is applied.
struct RadialPower {
  std::vector<double> power;  // power[k] covers [k / n, (k + 1) / n)
  std::size_t n = 0;

  double operator()(double lambda) const;
};

RadialPower radial_power(const RealGrid& field);

/// e_u2_unidirectional with the estimated spectrum, integrated exactly per annulus.
double e_u2_estimated(const RadialPower& p, int N, BandLimits band);

}  // namespace monodir
