#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "monodir/detect.hpp"
#include "monodir/grid.hpp"

namespace monodir {

struct ScanRow {
  std::size_t row = 0;  // window centre: top-left + window / 2
  std::size_t col = 0;
  double u_hat = 0.0;           // NaN for a constant window
  std::optional<double> angle;  // radians
  std::optional<Decision> decision;
};

struct ScanResult {
  std::size_t n = 0;
  std::size_t window = 0;
  std::size_t stride = 0;
  std::vector<ScanRow> rows;  // row-major window order
};

/// Sliding-window u_hat. Each window is mean-removed and transformed as its
/// own periodic patch. stride = 0 means stride = window.
ScanResult scan(const RealGrid& field, std::size_t window = 16, std::size_t stride = 0,
                const std::optional<DetectorConfig>& cfg = std::nullopt);

/// Columns row,col,u_hat,angle_deg[,decision].
void write_scan_csv(const ScanResult& r, std::ostream& os);

}  // namespace monodir
