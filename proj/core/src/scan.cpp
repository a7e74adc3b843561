#include "monodir/scan.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "monodir/measure.hpp"

namespace monodir {

ScanResult scan(const RealGrid& field, std::size_t window, std::size_t stride, const std::optional<DetectorConfig>& cfg) {
  if (window == 0 || window % 2 != 0) throw std::invalid_argument("scan: window must be even and positive");
  if (window > field.n()) throw std::invalid_argument("scan: window larger than the grid");
  if (stride == 0) stride = window;
  if (cfg) validate(*cfg);

  ScanResult out{field.n(), window, stride, {}};
  const std::size_t per_side = (field.n() - window) / stride + 1;
  out.rows.reserve(per_side * per_side);
  for (std::size_t wi = 0; wi < per_side; ++wi) {
    for (std::size_t wj = 0; wj < per_side; ++wj) {
      const std::size_t r0 = wi * stride, c0 = wj * stride;
      ScanRow row{r0 + window / 2, c0 + window / 2, std::numeric_limits<double>::quiet_NaN(), std::nullopt, std::nullopt};
      const MonogenicGrid m = monogenic(monodir::window(field, r0, c0, window));
      const CovZero c = cov_zero(m);
      if (c.rff > 0.0) {
        const DirectionalityResult d = unidirectionality(c);
        row.u_hat = d.u_hat;
        row.angle = d.angle;
        if (cfg) row.decision = decide(d, window, *cfg).decision;
      } else if (cfg) {
        row.decision = Decision::undecidable;
      }
      out.rows.push_back(row);
    }
  }
  return out;
}

void write_scan_csv(const ScanResult& r, std::ostream& os) {
  bool with_decision = false;
  for (const auto& row : r.rows) with_decision = with_decision || row.decision.has_value();
  os << "row,col,u_hat,angle_deg" << (with_decision ? ",decision" : "") << '\n';
  char buf[32];
  for (const auto& row : r.rows) {
    os << row.row << ',' << row.col << ',';
    if (std::isnan(row.u_hat)) {
      os << "nan";
    } else {
      std::snprintf(buf, sizeof buf, "%.9g", row.u_hat);
      os << buf;
    }
    os << ',';
    if (row.angle) {
      std::snprintf(buf, sizeof buf, "%.9g", *row.angle * 180.0 / std::numbers::pi);
      os << buf;
    } else {
      os << "nan";
    }
    if (with_decision) os << ',' << (row.decision ? to_string(*row.decision) : "undecidable");
    os << '\n';
  }
}

}  // namespace monodir
