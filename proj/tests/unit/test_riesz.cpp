#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "fixtures.hpp"
#include "monodir/fft.hpp"
#include "monodir/riesz.hpp"
#include "monodir/stats.hpp"

using monodir::RealGrid;
using monodir::testing::max_abs_diff;
using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

TEST(Wavenumber, Range) {
  const std::size_t n = 16;
  for (std::size_t i = 0; i < n; ++i) {
    const double k = monodir::wavenumber(monodir::bin_index(i, n), n);
    EXPECT_GT(k, -pi);
    EXPECT_LE(k, pi);
  }
  EXPECT_EQ(monodir::wavenumber(0, n), 0.0);
  EXPECT_EQ(monodir::wavenumber(-8, n), pi);
  EXPECT_EQ(monodir::bin_index(8, n), -8);
  EXPECT_EQ(monodir::bin_index(15, n), -1);
}

TEST(RieszKernels, ReferenceBins) {
  const std::size_t n = 16;
  const auto K = monodir::riesz_kernels(n);
  auto at = [&](const std::vector<cplx>& k, long l1, long l2) {
    const std::size_t c = static_cast<std::size_t>((l1 + 16) % 16), r = static_cast<std::size_t>((l2 + 16) % 16);
    return k[r * n + c];
  };
  EXPECT_EQ(at(K.k1, 0, 0), cplx(0, 0));
  EXPECT_EQ(at(K.k2, 0, 0), cplx(0, 0));
  for (long m = 1; m < 8; ++m) {
    EXPECT_NEAR(std::abs(at(K.k1, m, 0) - cplx(0, -1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(at(K.k2, m, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(at(K.k1, m, m) - cplx(0, -1 / std::sqrt(2.0))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(at(K.k2, m, m) - cplx(0, -1 / std::sqrt(2.0))), 0.0, 1e-15);
  }
  for (std::size_t i = 1; i < n * n; ++i) EXPECT_NEAR(std::norm(K.k1[i]) + std::norm(K.k2[i]), 1.0, 1e-15);
}

TEST(Monogenic, CosineToSine) {
  const std::size_t n = 64;
  const auto m = monodir::monogenic(monodir::testing::axis_wave(n, 8));
  double eg = 0.0, eh = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      eg = std::max(eg, std::abs(m.g(r, c) - std::sin(2 * pi * 8.0 / 64.0 * static_cast<double>(c))));
      eh = std::max(eh, std::abs(m.h(r, c)));
    }
  }
  EXPECT_LT(eg, 1e-10);
  EXPECT_LT(eh, 1e-10);
}

TEST(Monogenic, ConstantFieldIsZero) {
  const auto m = monodir::monogenic(monodir::testing::constant(16, 4.2));
  for (std::size_t i = 0; i < m.f.size(); ++i) {
    EXPECT_NEAR(m.f.data()[i], 0.0, 1e-12);
    EXPECT_NEAR(m.g.data()[i], 0.0, 1e-12);
    EXPECT_NEAR(m.h.data()[i], 0.0, 1e-12);
  }
}

TEST(Monogenic, Linear) {
  const auto f = monodir::testing::white_noise(32, 21);
  const auto a = monodir::monogenic(f);
  const auto b = monodir::monogenic(monodir::scaled(f, 3.7));
  EXPECT_LT(max_abs_diff(monodir::scaled(a.g, 3.7), b.g), 1e-12);
  EXPECT_LT(max_abs_diff(monodir::scaled(a.h, 3.7), b.h), 1e-12);
}

TEST(Monogenic, FieldIsMeanRemoved) {
  std::vector<double> v(64, 10.0);
  v[3] = 11.0;
  const auto m = monodir::monogenic(RealGrid(8, v));
  EXPECT_NEAR(monodir::mean(m.f), 0.0, 1e-15);
}

TEST(Monogenic, ImaginaryResidueLivesOnNyquistLines) {
  const std::size_t n = 16;
  const auto m = monodir::monogenic(monodir::testing::white_noise(n, 5));
  // g_im (-1)^{x1} depends only on x2.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double s = c % 2 ? -1.0 : 1.0;
      EXPECT_NEAR(s * m.g_im(r, c), m.g_im(r, 0), 1e-13);
    }
  }
  // Matches the inverse DFT of the Nyquist column alone.
  std::vector<cplx> F(m.f.data().begin(), m.f.data().end());
  monodir::fft::forward_2d(F, n);
  const auto K = monodir::riesz_kernels(n);
  std::vector<cplx> nyq(n * n);
  for (std::size_t r = 0; r < n; ++r) nyq[r * n + n / 2] = K.k1[r * n + n / 2] * F[r * n + n / 2];
  monodir::fft::inverse_2d(nyq, n);
  for (std::size_t i = 0; i < n * n; ++i) EXPECT_NEAR(nyq[i].imag(), m.g_im.data()[i], 1e-13);
}

TEST(Monogenic, ParsevalSplitIsExact) {
  for (std::size_t n : {8u, 16u, 64u}) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto c = monodir::cov_zero(monodir::monogenic(monodir::testing::white_noise(n, 100 + s)));
      EXPECT_NEAR(c.rgg + c.rhh, c.rff, 1e-12 * c.rff);
    }
  }
}

TEST(Monogenic, KernelSquareIdentity) {
  const std::size_t n = 16;
  const auto f = monodir::remove_mean(monodir::testing::white_noise(n, 8));
  std::vector<cplx> F(f.data().begin(), f.data().end());
  monodir::fft::forward_2d(F, n);
  const auto K = monodir::riesz_kernels(n);
  std::vector<cplx> lhs(n * n), rhs(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t i = r * n + c;
      const double k1 = monodir::wavenumber(monodir::bin_index(c, n), n);
      const double k2 = monodir::wavenumber(monodir::bin_index(r, n), n);
      const double m2 = k1 * k1 + k2 * k2;
      lhs[i] = K.k1[i] * K.k1[i] * F[i];
      rhs[i] = m2 == 0.0 ? 0.0 : -(k1 * k1 / m2) * F[i];
    }
  }
  monodir::fft::inverse_2d(lhs, n);
  monodir::fft::inverse_2d(rhs, n);
  for (std::size_t i = 0; i < n * n; ++i) EXPECT_NEAR(std::abs(lhs[i] - rhs[i]), 0.0, 1e-13);
}

TEST(Monogenic, RotationByNinetyDegrees) {
  // Rotating f by +90 degrees maps (g, h) to (-h, g) composed with the rotation.
  // Nyquist bins break the symmetry, so use a field without Nyquist content.
  const std::size_t n = 32;
  std::vector<double> v(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double x1 = static_cast<double>(c), x2 = static_cast<double>(r);
      v[r * n + c] = std::cos(2 * pi * (3 * x1 + 5 * x2) / n + 0.2) + 0.5 * std::sin(2 * pi * (7 * x1 - 2 * x2) / n);
    }
  }
  const RealGrid f(n, v);
  const auto m = monodir::monogenic(f);
  const auto mr = monodir::monogenic(monodir::rotate90(f));
  EXPECT_LT(max_abs_diff(mr.g, monodir::scaled(monodir::rotate90(m.h), -1.0)), 1e-12);
  EXPECT_LT(max_abs_diff(mr.h, monodir::rotate90(m.g)), 1e-12);
}
