#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "monodir/grid.hpp"

namespace monodir {

/// Raised when the inverse transform leaves an imaginary residue outside the Nyquist lines.
class FftConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signed bin index in [-n/2, n/2 - 1] for storage index idx in [0, n).
long bin_index(std::size_t idx, std::size_t n);

/// k_l = 2 pi l / n for l in (-n/2, n/2); the Nyquist bin l = -n/2 maps to +pi.
double wavenumber(long l, std::size_t n);

struct RieszKernels {
  std::size_t n = 0;
  // Row-major n x n; K1 follows the column (x1) wavenumber, K2 the row (x2) one.
  std::vector<std::complex<double>> k1;
  std::vector<std::complex<double>> k2;
};

RieszKernels riesz_kernels(std::size_t n);

/// f plus its periodic Riesz transforms g (x1) and h (x2).
///
/// With the Nyquist bins kept at k = +pi the kernels are not Hermitian on the
/// Nyquist lines, so IDFT(K F) carries an imaginary part of the form
/// (-1)^{x1} phi(x2) in g and (-1)^{x2} psi(x1) in h. That part is kept in
/// g_im / h_im so that lag-0 second moments satisfy Parseval exactly.
struct MonogenicGrid {
  RealGrid f;
  RealGrid g;
  RealGrid h;
  RealGrid g_im;
  RealGrid h_im;

  std::size_t n() const { return f.n(); }
};

/// Mean-removes `field` and applies both Riesz kernels in the DFT domain.
MonogenicGrid monogenic(const RealGrid& field);

}  // namespace monodir
