#include "monodir/detect.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monodir/fft.hpp"
#include "monodir/riesz.hpp"
#include "monodir/theory.hpp"

namespace monodir {

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::unidirectional:
      return "unidirectional";
    case Decision::not_unidirectional:
      return "not-unidirectional";
    case Decision::undecidable:
      return "undecidable";
  }
  return "undecidable";
}

void validate(const DetectorConfig& cfg) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(cfg.lambda_l > 0.0 && cfg.lambda_l < 0.5)) throw std::invalid_argument("lambda_l must lie in (0, 1/2)");
}

Detection decide(const DirectionalityResult& r, std::size_t n, const DetectorConfig& cfg) {
  validate(cfg);
  const ThresholdResult t = threshold_for_epsilon(cfg.epsilon, cfg.lambda_l, static_cast<int>(n));
  Detection d;
  d.u_hat = r.u_hat;
  d.angle = r.angle;
  d.eta = t.eta;
  d.threshold = t.threshold;
  if (!t.threshold) {
    d.decision = Decision::undecidable;
  } else {
    d.decision = r.u_hat >= *t.threshold ? Decision::unidirectional : Decision::not_unidirectional;
  }
  return d;
}

Detection detect(const RealGrid& field, const DetectorConfig& cfg) {
  validate(cfg);
  return decide(unidirectionality(monogenic(field)), field.n(), cfg);
}

namespace {

// (radius in cycles/sample, periodogram power) for every non-DC bin.
std::vector<std::pair<double, double>> periodogram_bins(const RealGrid& field) {
  const std::size_t n = field.n();
  const RealGrid f = remove_mean(field);
  std::vector<std::complex<double>> spec(f.data().begin(), f.data().end());
  fft::forward_2d(spec, n);

  std::vector<std::pair<double, double>> bins;
  bins.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double l1 = static_cast<double>(bin_index(c, n)) / static_cast<double>(n);
      const double l2 = static_cast<double>(bin_index(r, n)) / static_cast<double>(n);
      if (l1 == 0.0 && l2 == 0.0) continue;
      bins.emplace_back(std::hypot(l1, l2), std::norm(spec[r * n + c]));
    }
  }
  return bins;
}

}  // namespace

double estimate_lambda_l(const RealGrid& field, double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0)) throw std::invalid_argument("fraction must lie in (0, 1)");
  auto bins = periodogram_bins(field);
  double total = 0.0;
  for (const auto& b : bins) total += b.second;
  if (!(total > 0.0)) throw std::domain_error("estimate_lambda_l: field has no power");
  std::sort(bins.begin(), bins.end());
  double acc = 0.0;
  for (const auto& [radius, p] : bins) {
    acc += p;
    if (acc >= fraction * total) return std::min(radius, 0.5);
  }
  return 0.5;
}

double RadialPower::operator()(double lambda) const {
  if (!(lambda >= 0.0) || power.empty()) return 0.0;
  const auto k = static_cast<std::size_t>(lambda * static_cast<double>(n));
  return k < power.size() ? power[k] : power.back();
}

RadialPower radial_power(const RealGrid& field) {
  RadialPower out;
  out.n = field.n();
  out.power.assign(field.n() / 2, 0.0);
  const double dn = static_cast<double>(field.n());
  for (const auto& [radius, p] : periodogram_bins(field)) {
    // Corner bins beyond 1/2 are dropped.
    const auto k = static_cast<std::size_t>(radius * dn);
    if (k < out.power.size()) out.power[k] += p;
  }
  return out;
}

double e_u2_estimated(const RadialPower& p, int N, BandLimits band) {
  if (!(band.lambda_l > 0.0 && band.lambda_l < band.lambda_h && band.lambda_h <= 0.5)) {
    throw std::domain_error("e_u2_estimated: band must satisfy 0 < lambda_l < lambda_h <= 1/2");
  }
  if (N <= 0 || N % 2 != 0) throw std::domain_error("e_u2_estimated: N must be even and positive");
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  // Antiderivative of plane_wave_bracket.
  auto prim = [&](double l) { return 4.0 / pi2 * std::log(l) - 2.0 * l * l / 9.0 + (1.0 / 3.0 - 4.0 / pi2) * l; };
  const double dn = static_cast<double>(p.n);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < p.power.size(); ++k) {
    const double a = std::max(band.lambda_l, static_cast<double>(k) / dn);
    const double b = std::min(band.lambda_h, static_cast<double>(k + 1) / dn);
    if (!(b > a)) continue;
    num += p.power[k] * (prim(b) - prim(a));
    den += p.power[k] * (b - a);
  }
  if (!(den > 0.0)) throw std::domain_error("e_u2_estimated: no power inside the band");
  return num / den / N;
}

}  // namespace monodir
