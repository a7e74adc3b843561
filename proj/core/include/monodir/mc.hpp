#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monodir/synth.hpp"
#include "monodir/theory.hpp"

namespace monodir {

enum class FieldKind { iso, aniso, uni, separable, planewave };

FieldKind parse_field_kind(std::string_view s);
std::string_view to_string(FieldKind k);

/// Default parameters: Matern nu = 1.5, rho = 20, sigma2 = 1, lambda0 = 0.1;
/// unidirectional band [0.05, 0.5]; plane wave lambda0 = 1/8, random phase and direction.
PsdSpec default_spec(FieldKind k);

/// Runs fn(t) for t in [0, trials) on `workers` threads (0 = hardware concurrency).
/// result[t] depends only on t, so the output does not depend on scheduling.
std::vector<double> run_trials(std::size_t trials, const std::function<double(std::uint64_t)>& fn,
                               unsigned workers = 0);

double pairwise_sum(std::span<const double> v);

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(std::span<const double> v);
double median(std::vector<double> v);

/// u_hat of a field through the single-FFT spectral path.
double u_hat_fast(const RealGrid& field);

/// u_hat for trials 0..trials-1; trial t uses Seed{master, stream_base + t}.
std::vector<double> sample_u_hat(const PsdSpec& spec, std::size_t n, std::size_t trials, std::uint64_t master,
                                 std::uint64_t stream_base = 0, unsigned workers = 0);

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> density;  // integrates to 1 over [lo, hi]

  double bin_width() const { return (hi - lo) / static_cast<double>(density.size()); }
};

struct PdfEstimate {
  FieldKind kind{};
  std::size_t n = 0;
  Histogram hist;
  std::vector<double> samples;
  double median = 0.0;

  /// Fraction of samples in [a, b].
  double mass(double a, double b) const;
};

PdfEstimate pdf_estimate(FieldKind kind, std::size_t n, std::size_t trials, std::size_t bins, std::uint64_t master,
                         unsigned workers = 0);

struct SweepPoint {
  double axis = 0.0;
  double mean = 0.0;  // mean of 1 - u_hat
  double se = 0.0;
  double theory = 0.0;
  double bound = 0.0;  // NaN when not applicable
};

struct SweepResult {
  std::string axis_name;
  std::vector<SweepPoint> points;
  std::size_t trials = 0;
  std::uint64_t master = 0;
  std::optional<double> slope;  // log-log fit of mean against axis
};

/// Random-phase, random-direction plane waves of unit amplitude.
SweepResult sweep_planewave(const std::vector<double>& lambda0s, std::size_t n, std::size_t trials,
                            std::uint64_t master, unsigned workers = 0);

/// Theory column is the 1/N term of E[U2] for the spectrum on its band; bound is u2_bound(band_lo, N).
SweepResult sweep_unidirectional(const std::vector<std::size_t>& ns, std::size_t trials, const Unidirectional1D& spec,
                                 std::uint64_t master, unsigned workers = 0);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

struct BoundRow {
  double eta = 0.0;
  double empirical = 0.0;  // fraction of trials with u_hat <= 1 - eta
  PfaBound bound;
  bool holds() const { return bound.vacuous || empirical <= bound.value; }
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  double lambda_l = 0.0;
  std::vector<BoundRow> rows;
  std::vector<double> samples;
};

BoundReport bound_check(const Unidirectional1D& spec, double lambda_l, std::size_t n, std::size_t trials,
                        const std::vector<double>& etas, std::uint64_t master, unsigned workers = 0);
BoundReport bound_check(const std::vector<double>& u_hats, double lambda_l, std::size_t n,
                        const std::vector<double>& etas);

void write_csv(const SweepResult& r, std::ostream& os);
void write_csv(const BoundReport& r, std::ostream& os);
void write_csv(const PdfEstimate& p, std::ostream& os);

}  // namespace monodir
