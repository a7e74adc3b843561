#pragma once

#include <complex>
#include <cstddef>
#include <span>

// Thin FFTW wrapper. Plans are cached per size and built under a mutex;
// execution is reentrant.
namespace monodir::fft {

using cplx = std::complex<double>;

/// In-place unnormalized forward DFT of an n x n row-major array.
void forward_2d(std::span<cplx> data, std::size_t n);
/// In-place inverse DFT of an n x n array, scaled by 1/n^2.
void inverse_2d(std::span<cplx> data, std::size_t n);
/// Real-to-half-complex forward DFT; `out` holds n x (n/2 + 1) bins.
void forward_r2c_2d(std::span<const double> in, std::span<cplx> out, std::size_t n);
/// In-place unnormalized inverse (positive exponent) 1D DFT.
void backward_1d(std::span<cplx> data);

}  // namespace monodir::fft
