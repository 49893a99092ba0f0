// SPDX-License-Identifier: MIT
#include <blend/string.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using blend::BlendString;

namespace {
// Raw Taylor data f(z_i), f'(z_i) for f(z) = z^2.
BlendString<double> square_string() { return BlendString<double>({0, 1, 2}, {{0, 0}, {1, 2}, {4, 4}}); }
}  // namespace

TEST(BlendString, Validation) {
  EXPECT_THROW((BlendString<double>({0}, {{1}})), std::invalid_argument);
  EXPECT_THROW((BlendString<double>({0, 1}, {{1}})), std::invalid_argument);
  EXPECT_THROW((BlendString<double>({0, 0}, {{1}, {1}})), std::invalid_argument);
  EXPECT_THROW((BlendString<double>({0, 1}, {{1}, {}})), std::invalid_argument);
}

TEST(BlendString, SharedKnotData) {
  auto bs = square_string();
  auto at_knot = blend::string_eval(bs, 1.0, 1);
  EXPECT_DOUBLE_EQ(at_knot[0], 1.0);
  EXPECT_DOUBLE_EQ(at_knot[1], 2.0);
  EXPECT_EQ(bs.locate(1.0), 1u);
  EXPECT_EQ(bs.locate(0.0), 0u);
  EXPECT_EQ(bs.locate(2.0), 1u);  // closed last piece
  auto end = blend::string_eval(bs, 2.0, 1);
  EXPECT_DOUBLE_EQ(end[0], 4.0);
  EXPECT_NEAR(end[1], 4.0, 1e-14);
  EXPECT_THROW((void)blend::string_eval(bs, 2.5), std::out_of_range);
  EXPECT_THROW((void)blend::string_eval(bs, -0.1), std::out_of_range);
}

TEST(BlendString, ReproducesCubic) {
  std::mt19937_64 rng(6);
  auto c = blend::testing::uniform(rng, 4);
  auto f = [&](double z) { return c[0] + z * (c[1] + z * (c[2] + z * c[3])); };
  auto df = [&](double z) { return c[1] + z * (2 * c[2] + z * 3 * c[3]); };
  std::vector<double> knots{0, 0.3, 1};
  std::vector<std::vector<double>> taylor;
  for (double z : knots) taylor.push_back({f(z), df(z)});
  BlendString<double> bs(knots, taylor);
  for (double z : blend::testing::uniform(rng, 50, 0, 1)) EXPECT_LE(blend::testing::rel_err(bs.eval(z)[0], f(z)), 1e-12);
}

TEST(BlendString, ContinuityAtInteriorKnots) {
  std::mt19937_64 rng(10);
  std::vector<double> knots{0, 0.4, 0.9, 1.7, 2.0};
  std::vector<std::vector<double>> taylor;
  for (std::size_t i = 0; i < knots.size(); ++i) taylor.push_back(blend::testing::uniform(rng, 2 + i % 3));
  BlendString<double> bs(knots, taylor);
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    const std::size_t order = taylor[i].size() - 1;
    auto left = blend::PreparedBlend<double>(bs.piece(i - 1)).derivatives(1.0, order);
    auto right = blend::PreparedBlend<double>(bs.piece(i)).derivatives(0.0, order);
    double jfact = 1;
    for (std::size_t k = 0; k <= order; ++k) {
      if (k > 0) jfact *= static_cast<double>(k);
      EXPECT_LE(blend::testing::rel_err(left[k], right[k]), 1e-12) << i << "," << k;
      EXPECT_LE(blend::testing::rel_err(right[k], jfact * taylor[i][k]), 1e-12);
    }
  }
}

TEST(StringIntegrate, TrapezoidalForLinearData) {
  std::vector<double> knots{0, 0.25, 0.5, 0.75, 1.0};
  std::vector<std::vector<double>> taylor;
  double trap = 0;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    taylor.push_back({std::exp(knots[i])});
    if (i > 0) trap += 0.25 / 2 * (std::exp(knots[i - 1]) + std::exp(knots[i]));
  }
  EXPECT_NEAR(blend::string_integrate(BlendString<double>(knots, taylor)), trap, 1e-15);
}

TEST(StringIntegrate, CubicExact) {
  BlendString<double> bs({0, 0.5, 1}, {{0, 0}, {0.125, 0.75}, {1, 3}});
  EXPECT_NEAR(blend::string_integrate(bs), 0.25, 1e-16);
}

TEST(StringIntegrate, TelescopesToEndpointCorrection) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int K = 2 + static_cast<int>(rng() % 6);
    const double h = 0.1 + 0.2 * static_cast<double>(rng() % 5);
    std::vector<double> knots;
    std::vector<std::vector<double>> taylor;
    double trap = 0;
    for (int i = 0; i <= K; ++i) {
      knots.push_back(i * h);
      taylor.push_back(blend::testing::uniform(rng, 2));
      if (i > 0) trap += h / 2 * (taylor[static_cast<std::size_t>(i - 1)][0] + taylor.back()[0]);
    }
    const double want = trap + h * h / 12 * (taylor.front()[1] - taylor.back()[1]);
    EXPECT_NEAR(blend::string_integrate(BlendString<double>(knots, taylor)), want, 1e-14);
  }
}

TEST(StringIntegrate, EqualsLeftToRightPieceSum) {
  std::mt19937_64 rng(3);
  std::vector<double> knots{0, 0.1, 0.35, 0.6, 1.2};
  std::vector<std::vector<double>> taylor;
  for (std::size_t i = 0; i < knots.size(); ++i) taylor.push_back(blend::testing::uniform(rng, 4));
  BlendString<double> bs(knots, taylor);
  double sum = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) sum += blend::integrate(bs.piece(i));
  EXPECT_EQ(blend::string_integrate(bs), sum);
}

TEST(StringAntiderivative, ConstantGivesIdentity) {
  BlendString<double> ones({0, 1, 2}, {{1}, {1}, {1}});
  auto F = blend::string_antiderivative(ones, 0.0);
  for (double z : {0.0, 0.3, 1.0, 1.5, 2.0}) EXPECT_NEAR(F.eval(z)[0], z, 1e-15);
}

TEST(StringAntiderivative, DerivativeAndAccumulation) {
  std::mt19937_64 rng(44);
  std::vector<double> knots{-1, -0.2, 0.5, 1.5};
  std::vector<std::vector<double>> taylor;
  for (std::size_t i = 0; i < knots.size(); ++i) taylor.push_back(blend::testing::uniform(rng, 3));
  BlendString<double> bs(knots, taylor);
  const double F0 = 0.75;
  auto F = blend::string_antiderivative(bs, F0);
  EXPECT_NEAR(F.eval(knots.back())[0], blend::string_integrate(bs) + F0, 1e-14);
  for (double z : blend::testing::uniform(rng, 50, -0.99, 1.49)) {
    EXPECT_LE(blend::testing::rel_err(F.eval(z, 1)[1], bs.eval(z)[0]), 1e-12) << z;
  }
  for (std::size_t i = 0; i < knots.size(); ++i) EXPECT_EQ(F.taylor()[i].size(), taylor[i].size() + 1);
}
