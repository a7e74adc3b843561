#include "monodir/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

#include "monodir/measure.hpp"
#include "monodir/stats.hpp"

namespace monodir {

FieldKind parse_field_kind(std::string_view s) {
  if (s == "iso") return FieldKind::iso;
  if (s == "aniso") return FieldKind::aniso;
  if (s == "uni") return FieldKind::uni;
  if (s == "separable") return FieldKind::separable;
  if (s == "planewave") return FieldKind::planewave;
  throw std::invalid_argument("unknown field kind '" + std::string(s) + "'");
}

std::string_view to_string(FieldKind k) {
  switch (k) {
    case FieldKind::iso: return "iso";
    case FieldKind::aniso: return "aniso";
    case FieldKind::uni: return "uni";
    case FieldKind::separable: return "separable";
    case FieldKind::planewave: return "planewave";
  }
  return "iso";
}

PsdSpec default_spec(FieldKind k) {
  switch (k) {
    case FieldKind::iso: return ShiftedMatern{};
    case FieldKind::aniso: return ShiftedMatern{MaternParams{}, anisotropic_d()};
    case FieldKind::uni: return Unidirectional1D{};
    case FieldKind::separable: return SeparableMatern{};
    case FieldKind::planewave: return PlaneWave{};
  }
  return ShiftedMatern{};
}

std::vector<double> run_trials(std::size_t trials, const std::function<double(std::uint64_t)>& fn, unsigned workers) {
  std::vector<double> out(trials);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(trials, 1)));
  if (workers <= 1) {
    for (std::size_t t = 0; t < trials; ++t) out[t] = fn(t);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto body = [&] {
    for (std::size_t t = next++; t < trials && !failed; t = next++) {
      try {
        out[t] = fn(t);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t h = v.size() / 2;
  return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

MeanSe mean_se(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("mean_se: empty sample");
  const double n = static_cast<double>(v.size());
  const double mu = pairwise_sum(v) / n;
  std::vector<double> dev(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) dev[i] = (v[i] - mu) * (v[i] - mu);
  const double var = v.size() > 1 ? pairwise_sum(dev) / (n - 1.0) : 0.0;
  return {mu, std::sqrt(var / n)};
}

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median: empty sample");
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<long>(mid), v.end());
  const double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  const double lo = *std::max_element(v.begin(), v.begin() + static_cast<long>(mid));
  return 0.5 * (lo + hi);
}

double u_hat_fast(const RealGrid& field) { return unidirectionality(spectral_cov_zero(field)).u_hat; }

std::vector<double> sample_u_hat(const PsdSpec& spec, std::size_t n, std::size_t trials, std::uint64_t master,
                                 std::uint64_t stream_base, unsigned workers) {
  return run_trials(
      trials, [&](std::uint64_t t) { return u_hat_fast(generate(spec, n, Seed{master, stream_base + t})); }, workers);
}

double PdfEstimate::mass(double a, double b) const {
  if (samples.empty()) return 0.0;
  const auto k = std::count_if(samples.begin(), samples.end(), [&](double u) { return u >= a && u <= b; });
  return static_cast<double>(k) / static_cast<double>(samples.size());
}

PdfEstimate pdf_estimate(FieldKind kind, std::size_t n, std::size_t trials, std::size_t bins, std::uint64_t master,
                         unsigned workers) {
  if (trials < 100) throw std::invalid_argument("pdf_estimate: need at least 100 trials");
  if (bins == 0) throw std::invalid_argument("pdf_estimate: need at least one bin");
  PdfEstimate p;
  p.kind = kind;
  p.n = n;
  p.samples = sample_u_hat(default_spec(kind), n, trials, master, 0, workers);
  p.hist.density.assign(bins, 0.0);
  for (double u : p.samples) {
    auto b = static_cast<std::size_t>(std::clamp(u, 0.0, 1.0) * static_cast<double>(bins));
    p.hist.density[std::min(b, bins - 1)] += 1.0;
  }
  const double norm = static_cast<double>(trials) * p.hist.bin_width();
  for (double& d : p.hist.density) d /= norm;
  p.median = median(p.samples);
  return p;
}

namespace {

std::uint64_t point_stream(std::size_t point) { return static_cast<std::uint64_t>(point) << 32; }

std::vector<double> deficits(const std::vector<double>& u) {
  std::vector<double> d(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) d[i] = 1.0 - u[i];
  return d;
}

}  // namespace

SweepResult sweep_planewave(const std::vector<double>& lambda0s, std::size_t n, std::size_t trials,
                            std::uint64_t master, unsigned workers) {
  SweepResult r{"lambda0", {}, trials, master, std::nullopt};
  for (std::size_t i = 0; i < lambda0s.size(); ++i) {
    const PlaneWave spec{1.0, lambda0s[i], std::nullopt, std::nullopt};
    const auto d = deficits(sample_u_hat(spec, n, trials, master, point_stream(i), workers));
    const MeanSe ms = mean_se(d);
    r.points.push_back({lambda0s[i], ms.mean, ms.se, e_u2_planewave(lambda0s[i], static_cast<int>(n)),
                        std::numeric_limits<double>::quiet_NaN()});
  }
  return r;
}

SweepResult sweep_unidirectional(const std::vector<std::size_t>& ns, std::size_t trials, const Unidirectional1D& spec,
                                 std::uint64_t master, unsigned workers) {
  validate(spec);
  SweepResult r{"N", {}, trials, master, std::nullopt};
  const auto psd = [&](double l) { return matern_psd(spec.params, l); };
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const int N = static_cast<int>(ns[i]);
    const auto d = deficits(sample_u_hat(spec, ns[i], trials, master, point_stream(i), workers));
    const MeanSe ms = mean_se(d);
    r.points.push_back({static_cast<double>(N), ms.mean, ms.se,
                        e_u2_unidirectional(psd, N, BandLimits{spec.band_lo, spec.band_hi}),
                        u2_bound(spec.band_lo, N)});
    xs.push_back(static_cast<double>(N));
    ys.push_back(ms.mean);
  }
  if (xs.size() >= 2) r.slope = loglog_slope(xs, ys);
  return r;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 paired points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

BoundReport bound_check(const std::vector<double>& u_hats, double lambda_l, std::size_t n,
                        const std::vector<double>& etas) {
  BoundReport rep;
  rep.n = n;
  rep.trials = u_hats.size();
  rep.lambda_l = lambda_l;
  rep.samples = u_hats;
  for (double eta : etas) {
    const auto k = std::count_if(u_hats.begin(), u_hats.end(), [&](double u) { return u <= 1.0 - eta; });
    rep.rows.push_back({eta, static_cast<double>(k) / static_cast<double>(u_hats.size()),
                        pfa_bound(eta, lambda_l, static_cast<int>(n))});
  }
  return rep;
}

BoundReport bound_check(const Unidirectional1D& spec, double lambda_l, std::size_t n, std::size_t trials,
                        const std::vector<double>& etas, std::uint64_t master, unsigned workers) {
  return bound_check(sample_u_hat(spec, n, trials, master, 0, workers), lambda_l, n, etas);
}

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

void write_csv(const SweepResult& r, std::ostream& os) {
  os << r.axis_name << ",mean,stderr,theory,bound,trials,seed\n";
  for (const auto& p : r.points) {
    os << fmt(p.axis) << ',' << fmt(p.mean) << ',' << fmt(p.se) << ',' << fmt(p.theory) << ',' << fmt(p.bound) << ','
       << r.trials << ',' << r.master << '\n';
  }
}

void write_csv(const BoundReport& r, std::ostream& os) {
  os << "eta,empirical,bound,vacuous,holds\n";
  for (const auto& row : r.rows) {
    os << fmt(row.eta) << ',' << fmt(row.empirical) << ',' << fmt(row.bound.value) << ','
       << (row.bound.vacuous ? 1 : 0) << ',' << (row.holds() ? 1 : 0) << '\n';
  }
}

void write_csv(const PdfEstimate& p, std::ostream& os) {
  os << "bin_lo,bin_hi,density\n";
  const double w = p.hist.bin_width();
  for (std::size_t i = 0; i < p.hist.density.size(); ++i) {
    os << fmt(p.hist.lo + w * static_cast<double>(i)) << ',' << fmt(p.hist.lo + w * static_cast<double>(i + 1)) << ','
       << fmt(p.hist.density[i]) << '\n';
  }
}

}  // namespace monodir
