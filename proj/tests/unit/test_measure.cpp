#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "monodir/measure.hpp"
#include "monodir/synth.hpp"

using monodir::CovZero;
using monodir::testing::deg;
using monodir::testing::rad;
constexpr double pi = std::numbers::pi;

TEST(Unidirectionality, ExactAxisWave) {
  const auto r = monodir::measure_field(monodir::testing::axis_wave(64, 8, 0.9));
  EXPECT_NEAR(r.u_hat, 1.0, 1e-12);
  ASSERT_TRUE(r.angle.has_value());
  EXPECT_NEAR(*r.angle, 0.0, 1e-12);
  EXPECT_NEAR(r.lambda_max + r.lambda_min, 2 * r.cov.rff, 1e-10 * r.cov.rff);
}

TEST(Unidirectionality, IsotropicMomentsGiveZero) {
  const auto r = monodir::unidirectionality(CovZero{2.0, 1.0, 1.0, 0.0});
  EXPECT_EQ(r.u_hat, 0.0);
  EXPECT_FALSE(r.angle.has_value());
}

TEST(Unidirectionality, DegenerateFieldThrows) {
  EXPECT_THROW(monodir::measure_field(monodir::testing::constant(16, 3.0)), std::domain_error);
  EXPECT_THROW(monodir::unidirectionality(CovZero{}), std::domain_error);
}

TEST(Unidirectionality, UnidirectionalFieldAtThirtyDegrees) {
  monodir::Unidirectional1D spec;
  spec.direction = rad(30.0);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto r = monodir::measure_field(monodir::gen_unidirectional(spec, 64, {77, s}));
    EXPECT_GT(r.u_hat, 0.7) << "seed " << s;
    ASSERT_TRUE(r.angle.has_value());
    EXPECT_LT(deg(monodir::axial_difference(*r.angle, rad(30.0))), 2.0) << "seed " << s;
  }
}

TEST(Unidirectionality, ScaleInvariant) {
  const auto f = monodir::testing::white_noise(32, 4);
  const double u = monodir::measure_field(f).u_hat;
  for (double a : {-3.0, 1e-3, 250.0}) EXPECT_NEAR(monodir::measure_field(monodir::scaled(f, a)).u_hat, u, 1e-12);
}

TEST(Unidirectionality, BoundedOnMixedGrids) {
  // 10^4 grids: white noise, Matern, ridge fields, plane waves, at several sizes.
  int count = 0;
  for (std::uint64_t s = 0; s < 2500; ++s) {
    const std::size_t n = 8u << (s % 3);
    const monodir::Seed seed{99, s};
    for (const auto& f : {monodir::testing::white_noise(n, s), monodir::gen_field_2d(monodir::ShiftedMatern{}, n, seed),
                          monodir::gen_unidirectional(monodir::Unidirectional1D{}, n, seed),
                          monodir::gen_plane_wave(1.0, 0.05 + 0.4 * static_cast<double>(s % 97) / 97.0, n, seed)}) {
      const double u = monodir::unidirectionality(monodir::spectral_cov_zero(f)).u_hat;
      EXPECT_GE(u, 0.0);
      EXPECT_LE(u, 1.0 + 1e-12);
      ++count;
    }
  }
  EXPECT_EQ(count, 10000);
}

TEST(Unidirectionality, RotationByNinety) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto f = monodir::gen_field_2d(monodir::ShiftedMatern{monodir::MaternParams{}, monodir::anisotropic_d()}, 32, {5, s});
    const auto a = monodir::measure_field(f);
    const auto b = monodir::measure_field(monodir::rotate90(f));
    // Nyquist bins are not rotation symmetric; the residual is O(Nyquist power).
    EXPECT_NEAR(a.u_hat, b.u_hat, 1e-3);
    ASSERT_TRUE(a.angle && b.angle);
    EXPECT_LT(deg(monodir::axial_difference(*b.angle, *a.angle + pi / 2)), 0.5);
  }
}

TEST(Unidirectionality, RotationByNinetyWithoutNyquistContent) {
  const std::size_t n = 32;
  std::vector<double> v(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      v[r * n + c] = std::cos(2 * pi * (3.0 * c + 5.0 * r) / n) + 0.4 * std::cos(2 * pi * (1.0 * c - 2.0 * r) / n + 1.0);
  const monodir::RealGrid f(n, v);
  const auto a = monodir::measure_field(f);
  const auto b = monodir::measure_field(monodir::rotate90(f));
  EXPECT_NEAR(a.u_hat, b.u_hat, 1e-12);
  EXPECT_NEAR(monodir::axial_difference(*b.angle, *a.angle + pi / 2), 0.0, 1e-12);
}

TEST(Unidirectionality, SeparableFieldsLoseDirectionalityWithSize) {
  auto mean_u = [](std::size_t n) {
    double s = 0.0;
    for (std::uint64_t t = 0; t < 200; ++t)
      s += monodir::unidirectionality(monodir::spectral_cov_zero(monodir::gen_field_2d(monodir::SeparableMatern{}, n, {31, t}))).u_hat;
    return s / 200.0;
  };
  const double small = mean_u(32), large = mean_u(128);
  EXPECT_LT(large, small);
  EXPECT_LT(large, 0.15);
}

TEST(Coherency, PlaneWaveAndIsotropy) {
  const auto m = monodir::monogenic(monodir::testing::axis_wave(64, 8));
  EXPECT_NEAR(monodir::coherency_index(m), 1.0, 1e-12);
  EXPECT_EQ(monodir::coherency_index(CovZero{2.0, 1.0, 1.0, 0.0}), 0.0);
  EXPECT_THROW(monodir::coherency_index(CovZero{}), std::domain_error);
}

TEST(Coherency, EqualsUHatOnZeroMeanGrids) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto m = monodir::monogenic(monodir::testing::white_noise(16 + 16 * (s % 3), s));
    EXPECT_NEAR(monodir::coherency_index(m), monodir::unidirectionality(m).u_hat, 1e-10);
  }
}

TEST(TensorDirection, RowsConstant) {
  // f depends only on the row index (x2); it is constant along x1.
  const std::size_t n = 16;
  std::vector<double> v(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) v[r * n + c] = std::sin(2 * pi * 3.0 * static_cast<double>(r) / n);
  const auto t = monodir::tensor_direction(monodir::RealGrid(n, v));
  ASSERT_TRUE(t.has_value());
  EXPECT_NEAR(monodir::axial_difference(*t, 0.0), 0.0, 1e-12);
}

TEST(TensorDirection, DiagonalPlaneWave) {
  // The wave varies along 45 degrees; the direction of constancy is 135.
  std::vector<double> errs;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto f = monodir::gen_plane_wave(1.0, 0.1, 64, {3, s}, std::nullopt, rad(45.0));
    const auto t = monodir::tensor_direction(f);
    ASSERT_TRUE(t.has_value());
    errs.push_back(deg(monodir::axial_difference(*t, rad(135.0))));
    EXPECT_LT(deg(monodir::axial_difference(*monodir::tensor_variation_direction(f), rad(45.0))), 2.0);
  }
  EXPECT_LT(*std::max_element(errs.begin(), errs.end()), 2.0);
}

TEST(TensorDirection, IsotropicTensorIsUndefined) {
  const std::size_t n = 16;
  std::vector<double> v(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      v[r * n + c] = std::cos(2 * pi * 2.0 * static_cast<double>(c) / n) + std::cos(2 * pi * 2.0 * static_cast<double>(r) / n);
  EXPECT_FALSE(monodir::tensor_direction(monodir::RealGrid(n, v)).has_value());
  EXPECT_THROW(monodir::tensor_direction(monodir::zeros(2)), monodir::GridError);
}

TEST(TensorDirection, AgreesWithMonogenicAngle) {
  std::vector<double> diffs;
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto f = monodir::gen_unidirectional(monodir::Unidirectional1D{}, 128, {8, s});
    const auto a = monodir::measure_field(f).angle;
    const auto t = monodir::tensor_variation_direction(f);
    ASSERT_TRUE(a && t);
    diffs.push_back(deg(monodir::axial_difference(*a, *t)));
  }
  std::nth_element(diffs.begin(), diffs.begin() + 20, diffs.end());
  EXPECT_LT(diffs[20], 5.0);
}
