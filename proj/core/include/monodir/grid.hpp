#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodir {

/// Raised on malformed grids: odd or zero size, length mismatch, non-finite samples.
class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable n x n real field, row-major. Column index is x1, row index is x2.
class RealGrid {
 public:
  RealGrid(std::size_t n, std::vector<double> data);

  std::size_t n() const { return n_; }
  std::size_t size() const { return data_.size(); }
  double operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
  std::span<const double> data() const { return data_; }
  const std::vector<double>& values() const { return data_; }

  friend bool operator==(const RealGrid&, const RealGrid&) = default;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

RealGrid zeros(std::size_t n);
double mean(const RealGrid& g);
/// Population variance (divides by n^2).
double variance(const RealGrid& g);
RealGrid remove_mean(const RealGrid& g);
/// Counterclockwise rotation by 90 degrees in the (x1, x2) frame.
RealGrid rotate90(const RealGrid& g);
RealGrid scaled(const RealGrid& g, double alpha);
/// Square sub-block of side w with top-left corner (row, col).
RealGrid window(const RealGrid& g, std::size_t row, std::size_t col, std::size_t w);

struct GridHeader {
  std::size_t n = 0;
  std::string dtype = "f64le";
  std::string layout = "row-major";
  std::map<std::string, std::string> meta;
  std::string payload;
};

/// Writes `<stem>.json` and `<stem>.f64`. `path` may carry a .json extension or none.
void save_grid(const RealGrid& g, const std::filesystem::path& path,
               const std::map<std::string, std::string>& meta = {});
/// Reads a header/payload pair, or a CSV file when the extension is .csv.
RealGrid load_grid(const std::filesystem::path& path);
GridHeader load_header(const std::filesystem::path& path);

RealGrid load_csv(const std::filesystem::path& path);
void save_csv(const RealGrid& g, const std::filesystem::path& path);

}  // namespace monodir
