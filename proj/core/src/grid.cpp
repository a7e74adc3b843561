#include "monodir/grid.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace monodir {

namespace fs = std::filesystem;

RealGrid::RealGrid(std::size_t n, std::vector<double> data) : n_(n), data_(std::move(data)) {
  if (n_ == 0 || n_ % 2 != 0) throw GridError("grid side must be even and positive, got " + std::to_string(n_));
  if (data_.size() != n_ * n_) {
    throw GridError("grid size mismatch: n=" + std::to_string(n_) + " needs " + std::to_string(n_ * n_) +
                    " samples, got " + std::to_string(data_.size()));
  }
  for (double v : data_) {
    if (!std::isfinite(v)) throw GridError("grid contains a non-finite sample");
  }
}

RealGrid zeros(std::size_t n) { return RealGrid(n, std::vector<double>(n * n, 0.0)); }

double mean(const RealGrid& g) {
  double s = 0.0;
  for (double v : g.data()) s += v;
  return s / static_cast<double>(g.size());
}

double variance(const RealGrid& g) {
  const double mu = mean(g);
  double s = 0.0;
  for (double v : g.data()) s += (v - mu) * (v - mu);
  return s / static_cast<double>(g.size());
}

RealGrid remove_mean(const RealGrid& g) {
  const double mu = mean(g);
  std::vector<double> out(g.data().begin(), g.data().end());
  for (double& v : out) v -= mu;
  return RealGrid(g.n(), std::move(out));
}

RealGrid rotate90(const RealGrid& g) {
  // rot(x1, x2) = f(x2, -x1), periodic indices.
  const std::size_t n = g.n();
  std::vector<double> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out[r * n + c] = g(c == 0 ? 0 : n - c, r);
    }
  }
  return RealGrid(n, std::move(out));
}

RealGrid scaled(const RealGrid& g, double alpha) {
  std::vector<double> out(g.data().begin(), g.data().end());
  for (double& v : out) v *= alpha;
  return RealGrid(g.n(), std::move(out));
}

RealGrid window(const RealGrid& g, std::size_t row, std::size_t col, std::size_t w) {
  if (row + w > g.n() || col + w > g.n()) throw GridError("window exceeds grid bounds");
  std::vector<double> out(w * w);
  for (std::size_t r = 0; r < w; ++r) {
    for (std::size_t c = 0; c < w; ++c) out[r * w + c] = g(row + r, col + c);
  }
  return RealGrid(w, std::move(out));
}

namespace {

fs::path header_path(const fs::path& p) {
  fs::path h = p;
  if (h.extension() != ".json") h += ".json";
  return h;
}

}  // namespace

void save_grid(const RealGrid& g, const fs::path& path, const std::map<std::string, std::string>& meta) {
  const fs::path hdr = header_path(path);
  fs::path payload = hdr;
  payload.replace_extension(".f64");

  nlohmann::json j;
  j["n"] = g.n();
  j["dtype"] = "f64le";
  j["layout"] = "row-major";
  j["payload"] = payload.filename().string();
  j["meta"] = meta;

  std::ofstream hs(hdr);
  if (!hs) throw std::runtime_error("cannot open " + hdr.string() + " for writing");
  hs << j.dump(2) << '\n';

  std::ofstream ps(payload, std::ios::binary);
  if (!ps) throw std::runtime_error("cannot open " + payload.string() + " for writing");
  static_assert(std::endian::native == std::endian::little, "payload writer assumes a little-endian host");
  ps.write(reinterpret_cast<const char*>(g.data().data()), static_cast<std::streamsize>(g.size() * sizeof(double)));
  if (!ps) throw std::runtime_error("short write to " + payload.string());
}

GridHeader load_header(const fs::path& path) {
  const fs::path hdr = header_path(path);
  std::ifstream hs(hdr);
  if (!hs) throw std::runtime_error("cannot open " + hdr.string());
  nlohmann::json j;
  try {
    hs >> j;
  } catch (const nlohmann::json::exception& e) {
    throw GridError("malformed grid header " + hdr.string() + ": " + e.what());
  }
  GridHeader h;
  try {
    const auto n = j.at("n").get<long long>();
    if (n <= 0) throw GridError("grid header n must be positive");
    h.n = static_cast<std::size_t>(n);
    h.dtype = j.value("dtype", "f64le");
    h.layout = j.value("layout", "row-major");
    if (j.contains("meta")) h.meta = j.at("meta").get<std::map<std::string, std::string>>();
    fs::path def = hdr;
    def.replace_extension(".f64");
    h.payload = j.value("payload", def.filename().string());
  } catch (const nlohmann::json::exception& e) {
    throw GridError("malformed grid header " + hdr.string() + ": " + e.what());
  }
  if (h.dtype != "f64le") throw GridError("unsupported dtype " + h.dtype);
  if (h.layout != "row-major") throw GridError("unsupported layout " + h.layout);
  return h;
}

RealGrid load_grid(const fs::path& path) {
  if (path.extension() == ".csv") return load_csv(path);
  const GridHeader h = load_header(path);
  const fs::path payload = header_path(path).parent_path() / h.payload;

  std::ifstream ps(payload, std::ios::binary | std::ios::ate);
  if (!ps) throw std::runtime_error("cannot open " + payload.string());
  const auto bytes = static_cast<std::size_t>(ps.tellg());
  if (bytes % sizeof(double) != 0) throw GridError("payload is not a whole number of doubles");
  const std::size_t count = bytes / sizeof(double);
  if (count != h.n * h.n) {
    throw GridError("grid size mismatch: header n=" + std::to_string(h.n) + " but payload holds " +
                    std::to_string(count) + " values");
  }
  std::vector<double> data(count);
  ps.seekg(0);
  ps.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(bytes));
  return RealGrid(h.n, std::move(data));
}

RealGrid load_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<double> data;
  std::size_t rows = 0, cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(ss, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str()) throw GridError("non-numeric CSV field '" + cell + "'");
      data.push_back(v);
      ++c;
    }
    if (rows == 0) cols = c;
    if (c != cols) throw GridError("ragged CSV row " + std::to_string(rows + 1));
    ++rows;
  }
  if (rows != cols) throw GridError("CSV grid is not square");
  return RealGrid(rows, std::move(data));
}

void save_csv(const RealGrid& g, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.precision(17);
  for (std::size_t r = 0; r < g.n(); ++r) {
    for (std::size_t c = 0; c < g.n(); ++c) {
      if (c) out << ',';
      out << g(r, c);
    }
    out << '\n';
  }
}

}  // namespace monodir
