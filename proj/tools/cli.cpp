#include "monodir_cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monodir/detect.hpp"
#include "monodir/mc.hpp"
#include "monodir/measure.hpp"
#include "monodir/scan.hpp"
#include "monodir/synth.hpp"
#include "monodir/theory.hpp"

namespace monodir::cli {

using nlohmann::json;

double round9(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::strtod(buf, nullptr);
}

namespace {

constexpr double kPi = std::numbers::pi;

json num(double v) { return std::isfinite(v) ? json(round9(v)) : json("nan"); }

json angle_deg(const std::optional<double>& rad) {
  if (!rad) return "nan";
  double d = round9(*rad * 180.0 / kPi);
  if (d >= 180.0) d -= 180.0;
  return d;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to `path`, or to `out` when path is empty or "-".
template <typename F>
void with_output(const std::string& path, std::ostream& out, F&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot open " + path + " for writing");
  write(f);
}

struct Options {
  std::string in, out, kind = "iso", spec_path, mode, quantity;
  std::size_t n = 64;
  std::uint64_t seed = 0, stream = 0;
  std::size_t window = 16, stride = 0, trials = 500, bins = 50;
  unsigned workers = 0;
  double epsilon = 0.05, lambda_l = 0.05, lambda_h = 0.5, lambda0 = 0.1, eta = 0.1, nu_deg = 45.0;
  int sign = 1;
  bool estimate = false;
  std::vector<double> lambda0s{0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45};
  std::vector<std::size_t> ns{32, 64, 128, 256};
  std::vector<double> etas{0.01, 0.02, 0.05, 0.1, 0.2, 0.5};
};

int cmd_gen(const Options& o, std::ostream& out) {
  PsdSpec spec = o.spec_path.empty() ? default_spec(parse_field_kind(o.kind)) : spec_from_json(read_file(o.spec_path));
  const RealGrid g = generate(spec, o.n, Seed{o.seed, o.stream});
  const std::string spec_text = json::parse(spec_to_json(spec)).dump();
  save_grid(g, o.out,
            {{"kind", o.spec_path.empty() ? o.kind : "spec"}, {"seed", std::to_string(o.seed)},
             {"stream", std::to_string(o.stream)}, {"spec", spec_text}});
  json j;
  j["n"] = o.n;
  j["seed"] = o.seed;
  j["stream"] = o.stream;
  j["spec"] = json::parse(spec_text);
  std::filesystem::path hdr = o.out;
  if (hdr.extension() != ".json") hdr += ".json";
  j["path"] = hdr.string();
  emit(out, j);
  return kExitOk;
}

int cmd_measure(const Options& o, std::ostream& out) {
  const RealGrid g = load_grid(o.in);
  const MonogenicGrid m = monogenic(g);
  const DirectionalityResult r = unidirectionality(m);
  json j;
  j["n"] = g.n();
  j["u_hat"] = num(r.u_hat);
  j["angle_deg"] = angle_deg(r.angle);
  j["lambda_max"] = num(r.lambda_max);
  j["lambda_min"] = num(r.lambda_min);
  j["rff"] = num(r.cov.rff);
  j["rgg"] = num(r.cov.rgg);
  j["rhh"] = num(r.cov.rhh);
  j["rgh"] = num(r.cov.rgh);
  j["coherency"] = num(coherency_index(r.cov));
  const auto t = tensor_variation_direction(g);
  j["tensor_angle_deg"] = angle_deg(t);
  emit(out, j);
  return kExitOk;
}

int cmd_detect(const Options& o, std::ostream& out) {
  const RealGrid g = load_grid(o.in);
  const DetectorConfig cfg{o.epsilon, o.lambda_l};
  const Detection d = detect(g, cfg);
  json j;
  j["u_hat"] = num(d.u_hat);
  j["threshold"] = d.threshold ? num(*d.threshold) : json(nullptr);
  j["decision"] = std::string(to_string(d.decision));
  j["angle_deg"] = angle_deg(d.angle);
  j["eta"] = num(d.eta);
  j["epsilon"] = num(cfg.epsilon);
  j["lambda_l"] = num(cfg.lambda_l);
  j["n"] = g.n();
  if (o.estimate) j["lambda_l_estimate"] = num(estimate_lambda_l(g));
  emit(out, j);
  return d.decision == Decision::undecidable ? kExitUndecidable : kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out, bool with_cfg) {
  const RealGrid g = load_grid(o.in);
  std::optional<DetectorConfig> cfg;
  if (with_cfg) cfg = DetectorConfig{o.epsilon, o.lambda_l};
  const ScanResult r = scan(g, o.window, o.stride, cfg);
  with_output(o.out, out, [&](std::ostream& os) { write_scan_csv(r, os); });
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.mode == "planewave") {
    const auto r = sweep_planewave(o.lambda0s, o.n, o.trials, o.seed, o.workers);
    with_output(o.out, out, [&](std::ostream& os) { write_csv(r, os); });
  } else if (o.mode == "uni") {
    Unidirectional1D spec;
    spec.band_lo = o.lambda_l;
    spec.band_hi = o.lambda_h;
    const auto r = sweep_unidirectional(o.ns, o.trials, spec, o.seed, o.workers);
    with_output(o.out, out, [&](std::ostream& os) { write_csv(r, os); });
  } else if (o.mode == "pdf") {
    const auto p = pdf_estimate(parse_field_kind(o.kind), o.n, o.trials, o.bins, o.seed, o.workers);
    with_output(o.out, out, [&](std::ostream& os) { write_csv(p, os); });
  } else if (o.mode == "bound") {
    Unidirectional1D spec;
    spec.band_lo = o.lambda_l;
    spec.band_hi = o.lambda_h;
    const auto r = bound_check(spec, o.lambda_l, o.n, o.trials, o.etas, o.seed, o.workers);
    with_output(o.out, out, [&](std::ostream& os) { write_csv(r, os); });
  } else {
    throw InvalidInput("unknown sweep mode '" + o.mode + "'");
  }
  return kExitOk;
}

int cmd_theory(const Options& o, std::ostream& out) {
  json j;
  j["quantity"] = o.quantity;
  const int N = static_cast<int>(o.n);
  const double nu = o.nu_deg * kPi / 180.0;
  if (o.quantity == "e-u2-planewave") {
    j["lambda0"] = num(o.lambda0);
    j["n"] = N;
    j["value"] = num(e_u2_planewave(o.lambda0, N));
  } else if (o.quantity == "e-u2-uni") {
    j["lambda_l"] = num(o.lambda_l);
    j["lambda_h"] = num(o.lambda_h);
    if (o.in.empty()) {
      const MaternParams p;
      j["n"] = N;
      j["psd"] = "matern";
      j["value"] = num(e_u2_unidirectional([&](double l) { return matern_psd(p, l); }, N, {o.lambda_l, o.lambda_h}));
    } else {
      // Spectrum estimated from the grid; N is the grid side.
      const auto g = load_grid(o.in);
      j["n"] = g.n();
      j["psd"] = "periodogram";
      j["value"] = num(e_u2_estimated(radial_power(g), static_cast<int>(g.n()), {o.lambda_l, o.lambda_h}));
    }
  } else if (o.quantity == "u2-bound") {
    j["lambda_l"] = num(o.lambda_l);
    j["n"] = N;
    j["value"] = num(u2_bound(o.lambda_l, N));
  } else if (o.quantity == "pfa") {
    const auto b = pfa_bound(o.eta, o.lambda_l, N);
    j["eta"] = num(o.eta);
    j["lambda_l"] = num(o.lambda_l);
    j["n"] = N;
    j["value"] = num(b.value);
    j["vacuous"] = b.vacuous;
  } else if (o.quantity == "threshold") {
    const auto t = threshold_for_epsilon(o.epsilon, o.lambda_l, N);
    j["epsilon"] = num(o.epsilon);
    j["lambda_l"] = num(o.lambda_l);
    j["n"] = N;
    j["eta"] = num(t.eta);
    j["value"] = t.threshold ? num(*t.threshold) : json(nullptr);
    j["decidable"] = t.decidable();
    emit(out, j);
    return t.decidable() ? kExitOk : kExitUndecidable;
  } else if (o.quantity == "g-pm") {
    j["sign"] = o.sign;
    j["lambda0"] = num(o.lambda0);
    j["nu_deg"] = num(o.nu_deg);
    j["value"] = num(g_pm(o.sign, o.lambda0, std::cos(nu), std::sin(nu)));
  } else if (o.quantity == "g-sum") {
    j["lambda0"] = num(o.lambda0);
    j["nu_deg"] = num(o.nu_deg);
    j["value"] = num(g_sum(o.lambda0, std::cos(nu), std::sin(nu)));
  } else {
    throw InvalidInput("unknown theory quantity '" + o.quantity + "'");
  }
  emit(out, j);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unidirectionality analysis of 2D random fields via the monogenic signal", "monodir"};
  app.require_subcommand(1);
  Options o;

  auto add_seed = [&](CLI::App* sc) { sc->add_option("--seed", o.seed, "Master seed")->capture_default_str(); };

  auto* gen = app.add_subcommand("gen", "Generate a seeded field and write <out>.json + <out>.f64");
  gen->add_option("--kind", o.kind, "iso|aniso|uni|separable|planewave")->capture_default_str();
  gen->add_option("--spec", o.spec_path, "PSD spec JSON file (overrides --kind)");
  gen->add_option("--n", o.n, "Grid side (even)")->capture_default_str();
  gen->add_option("--stream", o.stream, "Trial substream")->capture_default_str();
  gen->add_option("--out", o.out, "Output path stem")->required();
  add_seed(gen);

  auto* meas = app.add_subcommand("measure", "Print u_hat, angle and lag-0 moments as JSON");
  meas->add_option("--in", o.in, "Grid header (.json) or .csv")->required();
  add_seed(meas);

  auto* det = app.add_subcommand("detect", "Run the threshold detector (exit 3 when undecidable)");
  det->add_option("--in", o.in, "Grid header (.json) or .csv")->required();
  det->add_option("--epsilon", o.epsilon, "False-alarm budget")->capture_default_str();
  det->add_option("--lambda-l", o.lambda_l, "Lower cutoff frequency (cycles/sample)")->capture_default_str();
  det->add_flag("--estimate-lambda-l", o.estimate, "Also report the advisory periodogram estimate of lambda_l");
  add_seed(det);

  auto* sc = app.add_subcommand("scan", "Sliding-window u_hat as CSV");
  sc->add_option("--in", o.in, "Grid header (.json) or .csv")->required();
  sc->add_option("--window", o.window, "Window side (even)")->capture_default_str();
  sc->add_option("--stride", o.stride, "Window stride (default: window)");
  auto* sc_eps = sc->add_option("--epsilon", o.epsilon, "Add per-window decisions with this budget");
  auto* sc_ll = sc->add_option("--lambda-l", o.lambda_l, "Lower cutoff for per-window decisions");
  sc->add_option("--out", o.out, "CSV path (default stdout)");
  add_seed(sc);

  auto* sw = app.add_subcommand("sweep", "Monte Carlo sweeps as CSV");
  sw->add_option("mode", o.mode, "planewave|uni|pdf|bound")->required();
  sw->add_option("--n", o.n, "Grid side for planewave/pdf/bound")->capture_default_str();
  sw->add_option("--ns", o.ns, "Grid sides for uni")->delimiter(',');
  sw->add_option("--lambda0", o.lambda0s, "Plane-wave frequencies")->delimiter(',');
  sw->add_option("--eta", o.etas, "Bound-check eta grid")->delimiter(',');
  sw->add_option("--kind", o.kind, "Field kind for pdf")->capture_default_str();
  sw->add_option("--bins", o.bins, "Histogram bins for pdf")->capture_default_str();
  sw->add_option("--lambda-l", o.lambda_l, "Band lower edge for uni/bound")->capture_default_str();
  sw->add_option("--lambda-h", o.lambda_h, "Band upper edge for uni/bound")->capture_default_str();
  sw->add_option("--trials", o.trials, "Trials per point")->capture_default_str();
  sw->add_option("--workers", o.workers, "Worker threads (0 = all cores)");
  sw->add_option("--out", o.out, "CSV path (default stdout)");
  add_seed(sw);

  auto* th = app.add_subcommand("theory", "Evaluate closed-form results as JSON");
  th->add_option("quantity", o.quantity, "e-u2-planewave|e-u2-uni|u2-bound|pfa|threshold|g-pm|g-sum")->required();
  th->add_option("--lambda0", o.lambda0, "Plane-wave frequency");
  th->add_option("--n", o.n, "Grid side N");
  th->add_option("--lambda-l", o.lambda_l, "Lower cutoff");
  th->add_option("--lambda-h", o.lambda_h, "Upper band edge");
  th->add_option("--eta", o.eta, "Markov level");
  th->add_option("--epsilon", o.epsilon, "False-alarm budget");
  th->add_option("--sign", o.sign, "+1 or -1 for g-pm");
  th->add_option("--nu-deg", o.nu_deg, "Direction in degrees");
  th->add_option("--in", o.in, "Grid whose periodogram replaces the Matern spectrum (e-u2-uni)");
  add_seed(th);

  std::vector<const char*> argv{"monodir"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "monodir: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (o.window % 2 != 0 || o.n % 2 != 0) {
    err << "monodir: grid and window sides must be even\n";
    return kExitInvalid;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (meas->parsed()) return cmd_measure(o, out);
    if (det->parsed()) return cmd_detect(o, out);
    if (sc->parsed()) return cmd_scan(o, out, sc_eps->count() > 0 || sc_ll->count() > 0);
    if (sw->parsed()) return cmd_sweep(o, out);
    if (th->parsed()) return cmd_theory(o, out);
  } catch (const std::exception& e) {
    // Bad files, malformed grids, out-of-range parameters and degenerate fields.
    err << "monodir: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace monodir::cli
