// SPDX-License-Identifier: MIT
#pragma once

/// \file calculus.hpp
/// Exact integration of blends, antiderivative blends, quadrature rules
/// and the classical truncation/integration error bounds.

#include <blend/core.hpp>
#include <blend/rational.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace blend {

/// Weights that integrate a grade (m, n) blend over s in [0, 1]:
/// integral = sum wp[j] p[j] + sum wq[j] q[j]. Exact for every polynomial
/// of degree <= m + n + 1.
struct QuadratureRule {
  int m = 0;
  int n = 0;
  std::vector<Rational> wp;
  std::vector<Rational> wq;

  [[nodiscard]] int exactness_grade() const noexcept { return m + n + 1; }

  template <typename T>
  [[nodiscard]] std::vector<T> wp_as() const {
    return cast<T>(wp);
  }
  template <typename T>
  [[nodiscard]] std::vector<T> wq_as() const {
    return cast<T>(wq);
  }

 private:
  template <typename T>
  static std::vector<T> cast(const std::vector<Rational>& w) {
    std::vector<T> out;
    out.reserve(w.size());
    for (const auto& x : w) {
      if constexpr (std::is_same_v<T, Rational>) {
        out.push_back(x);
      } else {
        out.push_back(T(to_double(x)));
      }
    }
    return out;
  }
};

/// wp_j = (m+1)! (m+n-j+1)! / ((m+n+2)! (j+1) (m-j)!)
/// wq_j = (-1)^j (n+1)! (m+n-j+1)! / ((m+n+2)! (j+1) (n-j)!)
///
/// m or n may be -1 (one-sided blend); the formula still holds and the
/// corresponding side is empty.
[[nodiscard]] inline QuadratureRule quadrature_weights(int m, int n) {
  if (m < -1 || n < -1 || (m < 0 && n < 0)) throw std::invalid_argument("quadrature_weights: need m, n >= -1, not both -1");
  QuadratureRule rule;
  rule.m = m;
  rule.n = n;
  const BigInt total = factorial(m + n + 2);
  const BigInt fm = factorial(m + 1);
  const BigInt fn = factorial(n + 1);
  rule.wp.reserve(static_cast<std::size_t>(m + 1));
  for (int j = 0; j <= m; ++j) {
    Rational w(fm * factorial(m + n - j + 1), total * (j + 1) * factorial(m - j));
    rule.wp.push_back(w);
  }
  rule.wq.reserve(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) {
    Rational w(fn * factorial(m + n - j + 1), total * (j + 1) * factorial(n - j));
    rule.wq.push_back(j % 2 == 0 ? w : Rational(-w));
  }
  return rule;
}

/// Integral over s in [0, 1] of the blend (no factor of h).
template <typename T>
[[nodiscard]] T integrate_unit(const Blend<T>& blend, const QuadratureRule& rule) {
  if (rule.m != blend.m() || rule.n != blend.n()) throw std::invalid_argument("quadrature rule grade mismatch");
  const auto wp = rule.wp_as<T>();
  const auto wq = rule.wq_as<T>();
  T sum = T(0);
  for (std::size_t j = 0; j < wp.size(); ++j) sum += wp[j] * blend.p()[j];
  for (std::size_t j = 0; j < wq.size(); ++j) sum += wq[j] * blend.q()[j];
  return sum;
}

template <typename T>
[[nodiscard]] T integrate_unit(const Blend<T>& blend) {
  return integrate_unit(blend, quadrature_weights(blend.m(), blend.n()));
}

/// Integral of the blend over z in [a, b]: h times the unit integral.
template <typename T>
[[nodiscard]] T integrate(const Blend<T>& blend) {
  return T(blend.h() * integrate_unit(blend));
}

/// Blend of F(s) = F0 + integral_0^s H, in s-units: grade (m+1, n+1).
/// The result has degree <= m + n + 2 but no coefficient is dropped.
template <typename T>
[[nodiscard]] Blend<T> antiderivative(const Blend<T>& blend, const T& initial) {
  const T total = integrate_unit(blend);
  std::vector<T> p{initial};
  std::vector<T> q{T(initial + total)};
  for (std::size_t j = 0; j < blend.p().size(); ++j) p.push_back(T(blend.p()[j] / T(static_cast<int>(j + 1))));
  for (std::size_t j = 0; j < blend.q().size(); ++j) q.push_back(T(blend.q()[j] / T(static_cast<int>(j + 1))));
  return Blend<T>(blend.a(), blend.b(), std::move(p), std::move(q));
}

/// Blend of F(z) = F0 + integral_a^z H dz: the s-space antiderivative with
/// every derivative coefficient scaled by h.
template <typename T>
[[nodiscard]] Blend<T> antiderivative_z(const Blend<T>& blend, const T& initial) {
  const T h = blend.h();
  const T total = T(h * integrate_unit(blend));
  std::vector<T> p{initial};
  std::vector<T> q{T(initial + total)};
  for (std::size_t j = 0; j < blend.p().size(); ++j) p.push_back(T(h * blend.p()[j] / T(static_cast<int>(j + 1))));
  for (std::size_t j = 0; j < blend.q().size(); ++j) q.push_back(T(h * blend.q()[j] / T(static_cast<int>(j + 1))));
  return Blend<T>(blend.a(), blend.b(), std::move(p), std::move(q));
}

namespace detail {
inline void check_derivative_bound(double bound) {
  if (!(bound >= 0)) throw std::invalid_argument("derivative bound M must be nonnegative");
}
}  // namespace detail

/// max_{s in [0,1]} |f(s) - H(s)| <= M / (m+n+2)! * max s^(m+1) (1-s)^(n+1),
/// with M bounding |f^(m+n+2)| on [0, 1]. The maximiser is
/// s* = (m+1) / (m+n+2). Works in logs so large grades do not overflow.
[[nodiscard]] inline double truncation_error_bound(int m, int n, double bound) {
  detail::check_derivative_bound(bound);
  if (m < -1 || n < -1) throw std::invalid_argument("orders must be >= -1");
  if (bound == 0) return 0.0;
  const double a = m + 1;
  const double b = n + 1;
  const double s = a / (a + b);
  double log_peak = 0;
  if (a > 0) log_peak += a * std::log(s);
  if (b > 0) log_peak += b * std::log1p(-s);
  return std::exp(std::log(bound) - std::lgamma(a + b + 1) + log_peak);
}

/// |integral f - integral H| over [0, 1] <= (m+1)!(n+1)!/(m+n+3)! * M/(m+n+2)!.
[[nodiscard]] inline double integration_error_bound(int m, int n, double bound) {
  detail::check_derivative_bound(bound);
  if (m < -1 || n < -1) throw std::invalid_argument("orders must be >= -1");
  if (bound == 0) return 0.0;
  const double a = m + 1;
  const double b = n + 1;
  const double log_beta = std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2);
  return std::exp(std::log(bound) + log_beta - std::lgamma(a + b + 1));
}

}  // namespace blend
