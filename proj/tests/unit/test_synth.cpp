#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "monodir/measure.hpp"
#include "monodir/synth.hpp"

using namespace monodir;
using monodir::testing::rad;
constexpr double pi = std::numbers::pi;

TEST(MaternPsd, IsotropicDependsOnRadiusOnly) {
  const ShiftedMatern s;
  for (double r : {0.0, 0.05, 0.1, 0.3}) {
    const double ref = matern_psd(s, r, 0.0);
    for (double th : {0.3, 1.0, 2.5}) EXPECT_NEAR(matern_psd(s, r * std::cos(th), r * std::sin(th)), ref, 1e-12 * ref);
  }
}

TEST(MaternPsd, PeakAtCentreFrequency) {
  const MaternParams p;
  const double peak = matern_psd(p, p.lambda0);
  for (int i = 0; i <= 500; ++i) EXPECT_LE(matern_psd(p, 0.5 * i / 500.0), peak);
}

TEST(MaternPsd, CentreToOriginRatio) {
  // Direct evaluation: [4 nu / (pi rho)^2 + lambda0^2]^(nu+1) / [4 nu / (pi rho)^2]^(nu+1).
  const MaternParams p;
  const double q0 = 4 * 1.5 / std::pow(pi * 20, 2);
  const double expected = std::pow((q0 + 0.01) / q0, 2.5);
  EXPECT_NEAR(matern_psd(p, 0.1) / matern_psd(p, 0.0), expected, 1e-12 * expected);
  EXPECT_NEAR(expected, 158.174050880, 1e-6);
}

TEST(MaternPsd, RejectsBadParameters) {
  EXPECT_THROW(matern_psd(MaternParams{1.0, 0.0, 20.0, 0.1}, 0.1), std::invalid_argument);
  EXPECT_THROW(matern_psd(MaternParams{1.0, 1.5, -1.0, 0.1}, 0.1), std::invalid_argument);
  EXPECT_THROW(validate(ShiftedMatern{MaternParams{}, {2.0, 0.0, 0.0, 2.0}}), std::invalid_argument);
  EXPECT_NO_THROW(validate(ShiftedMatern{MaternParams{}, anisotropic_d()}));
}

TEST(Field2d, VarianceMatchesDiscretePsdSum) {
  const std::size_t n = 64;
  const ShiftedMatern s;
  double expected = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const double l1 = static_cast<double>(bin_index(c, n)) / static_cast<double>(n);
      const double l2 = static_cast<double>(bin_index(r, n)) / static_cast<double>(n);
      expected += matern_psd(s, l1, l2) / (n * n);
    }
  double acc = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto f = gen_field_2d(s, n, {1, t});
    double ss = 0.0;
    for (double v : f.data()) ss += v * v;
    acc += ss / (n * n);
  }
  EXPECT_NEAR(acc / 100.0, expected, 0.1 * expected);
}

TEST(Field2d, Determinism) {
  const ShiftedMatern s;
  EXPECT_EQ(gen_field_2d(s, 32, {5, 1}), gen_field_2d(s, 32, {5, 1}));
  EXPECT_NE(gen_field_2d(s, 32, {5, 1}), gen_field_2d(s, 32, {5, 2}));
  EXPECT_NE(gen_field_2d(s, 32, {5, 1}), gen_field_2d(s, 32, {6, 1}));
}

TEST(Field2d, AnisotropicMoreDirectionalThanIsotropic) {
  std::vector<double> iso, an;
  for (std::uint64_t t = 0; t < 200; ++t) {
    iso.push_back(measure_field(gen_field_2d(ShiftedMatern{}, 64, {2, t})).u_hat);
    an.push_back(measure_field(gen_field_2d(ShiftedMatern{MaternParams{}, anisotropic_d()}, 64, {3, t})).u_hat);
  }
  std::sort(iso.begin(), iso.end());
  std::sort(an.begin(), an.end());
  EXPECT_LT(iso[100], an[100]);
}

TEST(Unidirectional, RowsIdenticalAtZero) {
  Unidirectional1D s;
  s.direction = 0.0;
  const auto f = gen_unidirectional(s, 64, {4, 4});
  double worst = 0.0;
  for (std::size_t r = 1; r < 64; ++r)
    for (std::size_t c = 0; c < 64; ++c) worst = std::max(worst, std::abs(f(r, c) - f(0, c)));
  EXPECT_LT(worst, 1e-10);
}

TEST(Unidirectional, ColumnsIdenticalAtNinety) {
  Unidirectional1D s;
  s.direction = pi / 2;
  const auto f = gen_unidirectional(s, 64, {4, 5});
  double worst = 0.0;
  for (std::size_t r = 0; r < 64; ++r)
    for (std::size_t c = 1; c < 64; ++c) worst = std::max(worst, std::abs(f(r, c) - f(r, 0)));
  EXPECT_LT(worst, 1e-10);
}

TEST(Unidirectional, InterpolatedMatchesDirectSum) {
  for (double nu : {0.0, 0.4, 1.9}) {
    Unidirectional1D s;
    s.direction = nu;
    const auto a = gen_unidirectional(s, 16, {9, 1});
    const auto b = gen_unidirectional_direct(s, 16, {9, 1});
    double scale = 0.0;
    for (double v : b.data()) scale = std::max(scale, std::abs(v));
    EXPECT_LT(monodir::testing::max_abs_diff(a, b), 1e-7 * scale);
  }
  // Random direction draws identically in both paths.
  const auto a = gen_unidirectional(Unidirectional1D{}, 16, {9, 2});
  const auto b = gen_unidirectional_direct(Unidirectional1D{}, 16, {9, 2});
  EXPECT_LT(monodir::testing::max_abs_diff(a, b), 1e-7);
}

TEST(Unidirectional, CovarianceRatiosFollowDirection) {
  for (double nu_deg : {0.0, 25.0, 60.0, 110.0, 150.0}) {
    Unidirectional1D s;
    s.direction = rad(nu_deg);
    const auto c = measure_field(gen_unidirectional(s, 128, {10, 0})).cov;
    const double cn = std::cos(rad(nu_deg)), sn = std::sin(rad(nu_deg));
    EXPECT_NEAR(c.rgg / c.rff, cn * cn, 0.05) << nu_deg;
    EXPECT_NEAR(c.rhh / c.rff, sn * sn, 0.05) << nu_deg;
  }
}

TEST(Unidirectional, HighUHatAtN64) {
  int above = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    if (unidirectionality(spectral_cov_zero(gen_unidirectional(Unidirectional1D{}, 64, {12, t}))).u_hat > 0.9) ++above;
  }
  EXPECT_GE(above, 950);
}

TEST(PlaneWave, FixtureIsExactAxisWave) {
  const auto f = gen_plane_wave(1.0, 8.0 / 64.0, 64, {0, 0}, 0.0, 0.0);
  EXPECT_LT(monodir::testing::max_abs_diff(f, monodir::testing::axis_wave(64, 8)), 1e-12);
}

TEST(PlaneWave, SampleVariance) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto f = gen_plane_wave(2.0, 0.13, 64, {14, t});
    double ss = 0.0, mu = mean(f);
    for (double v : f.data()) ss += (v - mu) * (v - mu);
    EXPECT_NEAR(ss / (64 * 64), 2.0, 0.04);
  }
  EXPECT_THROW(gen_plane_wave(1.0, 0.5, 16, {}), std::invalid_argument);
}

TEST(Beta, IsotropicLimit) {
  for (double k : {0.0, 0.7, 2.0, -1.3}) EXPECT_NEAR(beta_fn(1.0, 0.0, k), std::cos(k), 1e-15);
  const auto a = beta_coeffs(1.0, 0.0, 6);
  for (int l = -6; l <= 6; ++l) {
    const double expected = std::abs(l) == 1 ? 0.5 : 0.0;
    EXPECT_NEAR(std::abs(a[static_cast<std::size_t>(l + 6)] - expected), 0.0, 1e-10) << l;
  }
}

TEST(Beta, HalfSigmaAtZero) { EXPECT_NEAR(beta_fn(0.5, 0.0, 0.0), 1.0, 1e-15); }

TEST(Beta, ManyCoefficientsNeeded) {
  for (double alpha : {0.0, pi / 2}) {
    const auto a = beta_coeffs(0.5, alpha, 15);
    const auto big = std::count_if(a.begin(), a.end(), [](auto v) { return std::abs(v) > 1e-3; });
    EXPECT_GE(big, 6) << alpha;
  }
}

TEST(SpecJson, RoundTrip) {
  const std::vector<PsdSpec> specs = {ShiftedMatern{MaternParams{2.0, 0.5, 10.0, 0.2}, anisotropic_d()},
                                      Unidirectional1D{MaternParams{}, 0.3, 0.1, 0.4},
                                      Unidirectional1D{}, PlaneWave{1.5, 0.2, 0.1, std::nullopt}, SeparableMatern{}};
  for (const auto& s : specs) {
    const auto back = spec_from_json(spec_to_json(s));
    EXPECT_EQ(back.index(), s.index());
    EXPECT_EQ(spec_to_json(back), spec_to_json(s));
    EXPECT_EQ(generate(back, 16, {1, 1}), generate(s, 16, {1, 1}));
  }
  EXPECT_THROW(spec_from_json(R"({"variant": "Nope"})"), std::invalid_argument);
  EXPECT_THROW(spec_from_json("{"), std::invalid_argument);
}
