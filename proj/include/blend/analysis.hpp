// SPDX-License-Identifier: MIT
#pragma once

/// \file analysis.hpp
/// Conditioning and rounding-error tools: the Lebesgue function of the
/// blend basis, gamma_j bounds, binomial growth diagnostics and an exact
/// rational evaluator that serves as ground truth.

#include <blend/core.hpp>
#include <blend/eval.hpp>
#include <blend/rational.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blend {

/// Unit roundoff and rounding-error count for a gamma_j bound.
struct ErrorModelParams {
  double mu = std::numeric_limits<double>::epsilon() / 2;  // 2^-53 for binary64
  int j = 0;

  [[nodiscard]] bool valid() const noexcept { return j >= 0 && mu >= 0 && j * mu < 1; }
};

/// gamma_j = j mu / (1 - j mu), the bound on j accumulated rounding errors.
[[nodiscard]] inline double gamma_bound(int j, double mu = std::numeric_limits<double>::epsilon() / 2) {
  const double jm = static_cast<double>(j) * mu;
  if (j < 0 || mu < 0) throw std::invalid_argument("gamma_bound: j and mu must be nonnegative");
  if (jm >= 1) throw std::domain_error("gamma_bound: j * mu must be < 1");
  return jm / (1 - jm);
}

[[nodiscard]] inline double gamma_bound(const ErrorModelParams& params) { return gamma_bound(params.j, params.mu); }

/// Signed basis values at s: H(s) = sum left[j] p_j + sum right[j] q_j.
/// O(m + n) via prefix sums of the binomial series.
struct BasisValues {
  std::vector<double> left;
  std::vector<double> right;
};

[[nodiscard]] inline BasisValues basis_values(int m, int n, double s) {
  if (m < -1 || n < -1) throw std::invalid_argument("basis_values: orders must be >= -1");
  BasisValues out;
  out.left.resize(static_cast<std::size_t>(m + 1));
  out.right.resize(static_cast<std::size_t>(n + 1));
  const double t = 1 - s;

  // prefix[r] = sum_{k<=r} C(other+k, k) x^k
  auto prefix_sums = [](int count, int other, double x) {
    std::vector<double> sums(static_cast<std::size_t>(std::max(count, 0)));
    double term = 1;
    double acc = 0;
    for (int k = 0; k < count; ++k) {
      if (k > 0) term = term * x * (other + k) / k;
      acc += term;
      sums[static_cast<std::size_t>(k)] = acc;
    }
    return sums;
  };

  if (m >= 0) {
    const auto a = prefix_sums(m + 1, n, s);
    double tail = 1;  // (1-s)^(n+1)
    for (int i = 0; i <= n; ++i) tail *= t;
    double sj = 1;
    for (int j = 0; j <= m; ++j) {
      out.left[static_cast<std::size_t>(j)] = sj * tail * a[static_cast<std::size_t>(m - j)];
      sj *= s;
    }
  }
  if (n >= 0) {
    const auto b = prefix_sums(n + 1, m, t);
    double head = 1;  // s^(m+1)
    for (int i = 0; i <= m; ++i) head *= s;
    double tj = 1;
    for (int j = 0; j <= n; ++j) {
      const double sign = j % 2 == 0 ? 1.0 : -1.0;
      out.right[static_cast<std::size_t>(j)] = sign * head * tj * b[static_cast<std::size_t>(n - j)];
      tj *= t;
    }
  }
  return out;
}

/// Lebesgue function L_{m,n}(s): the sum of absolute basis values.
///
/// Inside [0, 1] every left basis term is positive and the right terms
/// alternate with (-1)^j, so L is the blend with p_j = 1, q_j = (-1)^j and
/// goes through the linear-cost evaluator. Outside, terms are summed
/// explicitly with absolute values.
[[nodiscard]] inline double lebesgue(int m, int n, double s) {
  if (m < -1 || n < -1 || (m < 0 && n < 0)) throw std::invalid_argument("lebesgue: need m, n >= -1, not both -1");
  if (s >= 0 && s <= 1) {
    std::vector<double> p(static_cast<std::size_t>(m + 1), 1.0);
    std::vector<double> q(static_cast<std::size_t>(n + 1), 1.0);
    for (std::size_t j = 1; j < q.size(); j += 2) q[j] = -1.0;
    return eval(Blend<double>(0.0, 1.0, std::move(p), std::move(q)), s);
  }
  const auto basis = basis_values(m, n, s);
  double sum = 0;
  for (double v : basis.left) sum += std::abs(v);
  for (double v : basis.right) sum += std::abs(v);
  return sum;
}

/// Rounding-error envelope for binary64 evaluation of a blend at s in
/// [0, 1]: the computed value is the exact value of a blend whose
/// coefficients are perturbed by at most gamma_{3m+2n+4} (left) and
/// gamma_{2m+3n+4} (right), so the forward error is bounded by
/// gamma_left * sum |p_j basis_j| + gamma_right * sum |q_j basis_j|.
struct ErrorBound {
  int m = 0;
  int n = 0;
  double s = 0;
  double mu = 0;
  double gamma_left = 0;
  double gamma_right = 0;
  double left_terms = 0;   // sum |p_j| |basis_j(s)|
  double right_terms = 0;  // sum |q_j| |basis_j(s)|

  [[nodiscard]] double value() const noexcept { return gamma_left * left_terms + gamma_right * right_terms; }
};

[[nodiscard]] inline ErrorBound backward_error_bound(const Blend<double>& blend, double s,
                                                     double mu = std::numeric_limits<double>::epsilon() / 2) {
  ErrorBound eb;
  eb.m = blend.m();
  eb.n = blend.n();
  eb.s = s;
  eb.mu = mu;
  eb.gamma_left = gamma_bound(3 * eb.m + 2 * eb.n + 4, mu);
  eb.gamma_right = gamma_bound(2 * eb.m + 3 * eb.n + 4, mu);
  const auto basis = basis_values(eb.m, eb.n, s);
  for (std::size_t j = 0; j < basis.left.size(); ++j) eb.left_terms += std::abs(blend.p()[j] * basis.left[j]);
  for (std::size_t j = 0; j < basis.right.size(); ++j) eb.right_terms += std::abs(blend.q()[j] * basis.right[j]);
  return eb;
}

/// Exact basis values, summed term by term from the double-sum definition
/// (binomials as integers, no Horner rearrangement). O(m n).
struct ExactBasis {
  std::vector<Rational> left;
  std::vector<Rational> right;
};

[[nodiscard]] inline ExactBasis exact_basis(int m, int n, const Rational& s) {
  if (m < -1 || n < -1) throw std::invalid_argument("exact_basis: orders must be >= -1");
  const Rational t = 1 - s;
  std::vector<Rational> s_pow(static_cast<std::size_t>(m + n + 3));
  std::vector<Rational> t_pow(static_cast<std::size_t>(m + n + 3));
  s_pow[0] = 1;
  t_pow[0] = 1;
  for (std::size_t i = 1; i < s_pow.size(); ++i) {
    s_pow[i] = s_pow[i - 1] * s;
    t_pow[i] = t_pow[i - 1] * t;
  }

  ExactBasis out;
  for (int j = 0; j <= m; ++j) {
    Rational inner = 0;
    for (int k = 0; k <= m - j; ++k) inner += Rational(binomial(n + k, k)) * s_pow[static_cast<std::size_t>(k + j)];
    out.left.push_back(inner * t_pow[static_cast<std::size_t>(n + 1)]);
  }
  for (int j = 0; j <= n; ++j) {
    Rational inner = 0;
    for (int k = 0; k <= n - j; ++k)
      inner += Rational(binomial(m + k, k)) * s_pow[static_cast<std::size_t>(m + 1)] * t_pow[static_cast<std::size_t>(k + j)];
    out.right.push_back(j % 2 == 0 ? inner : Rational(-inner));
  }
  return out;
}

/// Reference evaluation in exact rational arithmetic.
[[nodiscard]] inline Rational eval_exact(const Blend<Rational>& blend, const Rational& s) {
  const auto basis = exact_basis(blend.m(), blend.n(), s);
  Rational sum = 0;
  for (std::size_t j = 0; j < basis.left.size(); ++j) sum += blend.p()[j] * basis.left[j];
  for (std::size_t j = 0; j < basis.right.size(); ++j) sum += blend.q()[j] * basis.right[j];
  return sum;
}

/// log10 of the leading-order estimate C(2m, m) ~ 4^m / sqrt(pi m).
[[nodiscard]] inline double binomial_growth(int m) {
  if (m < 1) throw std::invalid_argument("binomial_growth: m must be >= 1");
  return m * std::log10(4.0) - 0.5 * std::log10(std::numbers::pi * m);
}

/// log10 C(n, k) via lgamma.
[[nodiscard]] inline double log10_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("log10_binomial: need 0 <= k <= n");
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::numbers::ln10;
}

/// A warning when the largest binomial of a grade (m, n) blend,
/// C(m+n, min(m,n)), exceeds the binary64 range. Overflow and underflow
/// then produce NaN away from the transition region; values that do come
/// out finite are still usable.
[[nodiscard]] inline std::optional<std::string> overflow_warning(int m, int n) {
  if (m < 1 || n < 1) return std::nullopt;
  const double digits = log10_binomial(m + n, std::min(m, n));
  if (digits <= std::log10(std::numeric_limits<double>::max())) return std::nullopt;
  return "grade (" + std::to_string(m) + "," + std::to_string(n) + ") blend: C(" + std::to_string(m + n) + "," +
         std::to_string(std::min(m, n)) + ") ~ 1e" + std::to_string(static_cast<int>(digits)) +
         " exceeds binary64 range; expect NaN where s^k or (1-s)^k underflow";
}

}  // namespace blend
