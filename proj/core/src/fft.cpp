#include "monodir/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace monodir::fft {
namespace {

enum class Kind { fwd2, inv2, r2c2, bwd1 };

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan get_plan(Kind kind, std::size_t n) {
  static std::map<std::tuple<Kind, std::size_t>, fftw_plan> cache;
  std::lock_guard lock(planner_mutex());
  auto it = cache.find({kind, n});
  if (it != cache.end()) return it->second;

  const int ni = static_cast<int>(n);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  fftw_plan p = nullptr;
  switch (kind) {
    case Kind::fwd2:
    case Kind::inv2: {
      std::vector<cplx> scratch(n * n);
      auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
      p = fftw_plan_dft_2d(ni, ni, buf, buf, kind == Kind::fwd2 ? FFTW_FORWARD : FFTW_BACKWARD, flags);
      break;
    }
    case Kind::r2c2: {
      std::vector<double> in(n * n);
      std::vector<cplx> out(n * (n / 2 + 1));
      p = fftw_plan_dft_r2c_2d(ni, ni, in.data(), reinterpret_cast<fftw_complex*>(out.data()), flags);
      break;
    }
    case Kind::bwd1: {
      std::vector<cplx> scratch(n);
      auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
      p = fftw_plan_dft_1d(ni, buf, buf, FFTW_BACKWARD, flags);
      break;
    }
  }
  if (p == nullptr) throw std::runtime_error("fftw plan creation failed");
  cache.emplace(std::make_tuple(kind, n), p);
  return p;
}

void check_square(std::size_t have, std::size_t n) {
  if (n == 0 || have != n * n) throw std::invalid_argument("fft: buffer is not n x n");
}

}  // namespace

void forward_2d(std::span<cplx> data, std::size_t n) {
  check_square(data.size(), n);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(get_plan(Kind::fwd2, n), buf, buf);
}

void inverse_2d(std::span<cplx> data, std::size_t n) {
  check_square(data.size(), n);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(get_plan(Kind::inv2, n), buf, buf);
  const double s = 1.0 / static_cast<double>(n * n);
  for (auto& v : data) v *= s;
}

void forward_r2c_2d(std::span<const double> in, std::span<cplx> out, std::size_t n) {
  check_square(in.size(), n);
  if (out.size() != n * (n / 2 + 1)) throw std::invalid_argument("fft: r2c output has wrong size");
  // FFTW does not modify the input of an out-of-place r2c transform.
  fftw_execute_dft_r2c(get_plan(Kind::r2c2, n), const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

void backward_1d(std::span<cplx> data) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(get_plan(Kind::bwd1, data.size()), buf, buf);
}

}  // namespace monodir::fft
