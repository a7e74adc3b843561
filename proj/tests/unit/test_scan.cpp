#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fixtures.hpp"
#include "monodir/mc.hpp"
#include "monodir/measure.hpp"
#include "monodir/scan.hpp"
#include "monodir/synth.hpp"

using namespace monodir;
constexpr double pi = std::numbers::pi;

TEST(Scan, WindowCountAndCentres) {
  const auto f = monodir::testing::white_noise(64, 1);
  const auto r = scan(f, 16, 8);
  EXPECT_EQ(r.rows.size(), 7u * 7u);
  EXPECT_EQ(r.rows[0].row, 8u);
  EXPECT_EQ(r.rows[0].col, 8u);
  EXPECT_EQ(r.rows[1].col, 16u);
  EXPECT_EQ(scan(f, 16, 5).rows.size(), 10u * 10u);
  EXPECT_THROW(scan(f, 128), std::invalid_argument);
  EXPECT_THROW(scan(f, 15), std::invalid_argument);
}

TEST(Scan, UnidirectionalFieldTiles) {
  Unidirectional1D spec;
  spec.direction = monodir::testing::rad(35.0);
  const auto f = gen_unidirectional(spec, 128, {3, 3});
  // Expected 1 - u_hat is about 0.25 for 16 x 16 tiles at this centre frequency.
  std::vector<double> u, err;
  for (const auto& row : scan(f, 16, 16).rows) {
    u.push_back(row.u_hat);
    ASSERT_TRUE(row.angle.has_value());
    err.push_back(monodir::testing::deg(axial_difference(*row.angle, monodir::testing::rad(35.0))));
  }
  EXPECT_GT(monodir::median(u), 0.6);
  EXPECT_LT(monodir::median(err), 10.0);
  EXPECT_LT(*std::max_element(err.begin(), err.end()), 30.0);
}

TEST(Scan, WhiteNoiseMedian) {
  const auto r = scan(monodir::testing::white_noise(256, 2), 16, 16);
  std::vector<double> u;
  for (const auto& row : r.rows) u.push_back(row.u_hat);
  std::nth_element(u.begin(), u.begin() + static_cast<long>(u.size() / 2), u.end());
  EXPECT_LT(u[u.size() / 2], 0.4);
}

TEST(Scan, DisjointTilesEqualStandaloneMeasure) {
  const auto f = gen_field_2d(ShiftedMatern{MaternParams{}, anisotropic_d()}, 64, {1, 9});
  const auto r = scan(f, 16, 16);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j, ++k) {
      const auto m = measure_field(window(f, i * 16, j * 16, 16));
      EXPECT_NEAR(r.rows[k].u_hat, m.u_hat, 1e-12);
      ASSERT_EQ(r.rows[k].angle.has_value(), m.angle.has_value());
      if (m.angle) EXPECT_NEAR(*r.rows[k].angle, *m.angle, 1e-12);
    }
  }
}

TEST(Scan, ConstantWindowIsNan) {
  std::vector<double> v(32 * 32, 1.0);
  for (std::size_t r = 16; r < 32; ++r)
    for (std::size_t c = 0; c < 32; ++c) v[r * 32 + c] = std::cos(0.8 * static_cast<double>(c));
  const auto res = scan(RealGrid(32, v), 16, 16, DetectorConfig{0.05, 0.05});
  EXPECT_TRUE(std::isnan(res.rows[0].u_hat));
  EXPECT_FALSE(res.rows[0].angle.has_value());
  EXPECT_EQ(res.rows[0].decision, Decision::undecidable);
  std::ostringstream os;
  write_scan_csv(res, os);
  EXPECT_NE(os.str().find("row,col,u_hat,angle_deg,decision\n8,8,nan,nan,undecidable\n"), std::string::npos);
}

TEST(Scan, CompositeSeparatesStriatedFromMottled) {
  // Left half: ridge field. Right half: isotropic Matern.
  const std::size_t n = 128;
  Unidirectional1D spec;
  spec.direction = 1.0;
  const auto a = gen_unidirectional(spec, n, {5, 1});
  const auto b = gen_field_2d(ShiftedMatern{}, n, {5, 2});
  std::vector<double> v(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) v[r * n + c] = c < n / 2 ? a(r, c) : b(r, c);
  const auto res = scan(RealGrid(n, v), 32, 32);
  double left = 0.0, right = 0.0;
  for (const auto& row : res.rows) (row.col < n / 2 ? left : right) += row.u_hat;
  EXPECT_GT(left / 8, right / 8 + 0.3);
}
