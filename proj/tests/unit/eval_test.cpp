// SPDX-License-Identifier: MIT
#include <blend/eval.hpp>
#include <blend/generators.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using blend::Blend;
using blend::testing::uniform;

namespace {

Blend<double> random_blend(std::mt19937_64& rng, int max_order = 10) {
  const int m = static_cast<int>(rng() % (max_order + 1));
  const int n = static_cast<int>(rng() % (max_order + 1));
  return Blend<double>(0.0, 1.0, uniform(rng, m + 1), uniform(rng, n + 1));
}

double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace

TEST(Hsf, HandTraces) {
  EXPECT_NEAR(blend::hsf(0, 0, 0.3, std::vector<double>{1.0}), 0.7, 1e-16);
  // (1-s)[(1+s) + s] at s = 1/2
  EXPECT_DOUBLE_EQ(blend::hsf(1, 0, 0.5, std::vector<double>{1.0, 1.0}), 1.0);
  EXPECT_EQ(blend::hsf(4, 3, 0.0, std::vector<double>{0.25, 7, 7, 7, 7}), 0.25);
  EXPECT_EQ(blend::hsf(-1, 3, 0.4, std::vector<double>{}), 0.0);
  EXPECT_THROW((void)blend::hsf(2, 1, 0.5, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(Eval, SmallExamples) {
  EXPECT_EQ(blend::eval(Blend<double>(0.0, 1.0, {-1}, {1}), 0.5), 0.0);
  // s(1-s)^2 + s^2 (3 - 2s) at 1/2
  EXPECT_DOUBLE_EQ(blend::eval(Blend<double>(0.0, 1.0, {0, 1}, {1, 0}), 0.5), 0.625);
}

TEST(Eval, CosPiEightEightAtMidpoint) {
  EXPECT_NEAR(blend::eval(blend::gen_cospi(8, 8), 0.5), 0.0, 1e-12);
}

TEST(Eval, OneSidedIsPlainHorner) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = static_cast<int>(rng() % 12);
    auto p = uniform(rng, m + 1);
    Blend<double> b(0.0, 1.0, p, {});
    for (double s : uniform(rng, 5, 0, 1)) {
      double horner = p.back();
      for (int j = m - 1; j >= 0; --j) horner = p[static_cast<std::size_t>(j)] + s * horner;
      EXPECT_EQ(blend::eval(b, s), horner);
    }
  }
  // Right-sided: Taylor polynomial in (s - 1).
  Blend<double> r(0.0, 1.0, {}, {1.0, 2.0, 3.0});
  EXPECT_NEAR(blend::eval(r, 0.25), 1 + 2 * (-0.75) + 3 * 0.5625, 1e-15);
}

TEST(EvalDerivatives, InterpolationAtEnds) {
  Blend<double> b(0.0, 1.0, {0, 1}, {1, 0});
  auto left = blend::eval_derivatives(b, 0.0, 1);
  auto right = blend::eval_derivatives(b, 1.0, 1);
  EXPECT_DOUBLE_EQ(left[0], 0.0);
  EXPECT_DOUBLE_EQ(left[1], 1.0);
  EXPECT_DOUBLE_EQ(right[0], 1.0);
  EXPECT_NEAR(right[1], 0.0, 1e-15);
}

TEST(EvalDerivatives, ChainRuleOnWideInterval) {
  // f(z) = z on [0, 2]
  Blend<double> b(0.0, 2.0, {0, 2}, {2, 2});
  for (double s : {0.0, 0.3, 0.5, 1.0}) {
    auto d = blend::eval_derivatives(b, s, 3);
    EXPECT_NEAR(d[0], 2 * s, 1e-15);
    EXPECT_NEAR(d[1], 1.0, 1e-15);
    EXPECT_NEAR(d[2], 0.0, 1e-14);
    EXPECT_NEAR(d[3], 0.0, 1e-14);
  }
}

TEST(EvalDerivatives, InterpolationConditionsProperty) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto b = random_blend(rng);
    const auto nder = static_cast<std::size_t>(std::max(b.m(), b.n()));
    auto left = blend::eval_derivatives(b, 0.0, nder);
    auto right = blend::eval_derivatives(b, 1.0, nder);
    for (int j = 0; j <= b.m(); ++j) {
      const double want = factorial(j) * b.p()[static_cast<std::size_t>(j)];
      EXPECT_LE(blend::testing::rel_err(left[static_cast<std::size_t>(j)], want), 1e-10) << "p" << j;
    }
    for (int j = 0; j <= b.n(); ++j) {
      const double want = factorial(j) * b.q()[static_cast<std::size_t>(j)];
      EXPECT_LE(blend::testing::rel_err(right[static_cast<std::size_t>(j)], want), 1e-10) << "q" << j;
    }
  }
}

TEST(EvalDerivatives, LowerOrderIsPrefix) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto b = random_blend(rng);
    for (double s : uniform(rng, 4, 0, 1)) {
      auto full = blend::eval_derivatives(b, s, 5);
      for (std::size_t k = 0; k <= 5; ++k) {
        auto shorter = blend::eval_derivatives(b, s, k);
        for (std::size_t i = 0; i <= k; ++i) EXPECT_EQ(shorter[i], full[i]);
      }
      EXPECT_EQ(full[0], blend::eval(b, s));
    }
  }
}

TEST(EvalDerivatives, MatchesCentralDifference) {
  std::mt19937_64 rng(99);
  const double step = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    auto b = random_blend(rng);
    for (double s : uniform(rng, 5, 0.01, 0.99)) {
      const double fd = (blend::eval(b, s + step) - blend::eval(b, s - step)) / (2 * step);
      EXPECT_NEAR(blend::eval_derivatives(b, s, 1)[1], fd, 1e-5);
    }
  }
}

TEST(Eval, PolynomialReproduction) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = static_cast<int>(rng() % 7);
    const int n = static_cast<int>(rng() % 7);
    const int degree = static_cast<int>(rng() % static_cast<unsigned>(m + n + 2));
    blend::testing::ExactPoly poly;
    for (double c : blend::testing::dyadic(rng, static_cast<std::size_t>(degree + 1))) poly.c.push_back(blend::to_rational(c));
    auto to_d = [](const std::vector<blend::Rational>& v) {
      std::vector<double> out;
      for (const auto& x : v) out.push_back(blend::to_double(x));
      return out;
    };
    Blend<double> b(0.0, 1.0, to_d(poly.taylor(0, m)), to_d(poly.taylor(1, n)));
    for (double s : uniform(rng, 100, 0, 1)) {
      const double want = blend::to_double(poly(blend::to_rational(s)));
      EXPECT_LE(blend::testing::rel_err(blend::eval(b, s), want), 1e-12) << m << "," << n << " deg " << degree;
    }
  }
}

TEST(EvalGrid, ShapesAndOrder) {
  Blend<double> c(0.0, 1.0, {2.5, 0}, {2.5});
  std::vector<double> pts{0.0, 0.5, 1.0};
  auto g = blend::eval_grid(c, pts, 0);
  ASSERT_EQ(g.rows, 3u);
  ASSERT_EQ(g.cols, 1u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(g(i, 0), 2.5);

  auto empty = blend::eval_grid(c, std::vector<double>{}, 2);
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(empty.cols, 3u);
}

TEST(EvalGrid, ThreadedMatchesSerial) {
  auto b = blend::gen_cospi(12, 9);
  std::vector<double> pts(517);
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<double>(i) / 516.0;
  auto serial = blend::eval_grid(b, pts, 2, 1);
  auto threaded = blend::eval_grid(b, pts, 2, 4);
  EXPECT_EQ(serial.data, threaded.data);
}

TEST(EvalGrid, HighGradeStepHasNaNOnlyInFlatBands) {
  auto b = blend::gen_step(987, 610);
  std::vector<double> pts(2021);
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<double>(i) / 2020.0;
  auto g = blend::eval_grid(b, pts, 1);
  std::size_t nans = 0;
  for (std::size_t i = 0; i < g.rows; ++i) {
    if (std::isnan(g(i, 0))) {
      ++nans;
      // NaNs sit away from the transition near s = 988/1599.
      EXPECT_GT(std::abs(pts[i] - 988.0 / 1599.0), 0.02) << i;
    }
  }
  EXPECT_GT(nans, 0u);
  EXPECT_TRUE(std::isfinite(g(1248, 0)));
  EXPECT_TRUE(std::isfinite(g(1249, 0)));
  EXPECT_LT(g(1248, 0), 0.0);
  EXPECT_GT(g(1249, 0), 0.0);
}

TEST(Eval, ComplexPointsAgreeWithRealAxisAndReflection) {
  auto b = blend::gen_step(3, 5);
  auto r = blend::reflect(b);
  for (int i = 0; i <= 20; ++i) {
    for (int k = -5; k <= 5; ++k) {
      const std::complex<double> s(-2.0 + 0.2 * i, 0.2 * k);
      const auto v = blend::eval(b, s);
      EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
      const auto w = blend::eval(r, std::complex<double>(1.0) - s);
      EXPECT_LE(std::abs(v - w), 1e-12 * std::max(1.0, std::abs(v)));
      // Real coefficients: conjugate symmetry.
      EXPECT_LE(std::abs(blend::eval(b, std::conj(s)) - std::conj(v)), 1e-12 * std::max(1.0, std::abs(v)));
    }
    const double x = -2.0 + 0.2 * i;
    EXPECT_NEAR(blend::eval(b, std::complex<double>(x, 0)).real(), blend::eval(b, x), 1e-12 * std::max(1.0, std::abs(blend::eval(b, x))));
  }
}

TEST(Eval, ExactRationalPathMatchesOracleValues) {
  using blend::Rational;
  Blend<Rational> b(Rational(0), Rational(1), {Rational(0), Rational(1)}, {Rational(1), Rational(0)});
  EXPECT_EQ(blend::eval(b, Rational(1, 2)), Rational(5, 8));
}
