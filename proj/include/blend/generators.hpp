// SPDX-License-Identifier: MIT
#pragma once

/// \file generators.hpp
/// Taylor data for standard test functions on [0, 1], plus exact Taylor
/// shifts of arbitrary polynomials.

#include <blend/core.hpp>
#include <blend/rational.hpp>

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace blend {

namespace detail {
inline void check_orders(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("generator orders must be >= 0");
}
}  // namespace detail

/// cos(pi s): p_j = (-1)^(j/2) pi^j / j! for even j, zero for odd j;
/// the coefficients at s = 1 are the negatives of those at s = 0.
[[nodiscard]] inline Blend<double> gen_cospi(int m, int n) {
  detail::check_orders(m, n);
  const int top = std::max(m, n);
  std::vector<double> c(static_cast<std::size_t>(top + 1), 0.0);
  double term = 1;  // (-1)^(j/2) pi^j / j!
  for (int j = 0; j <= top; j += 2) {
    c[static_cast<std::size_t>(j)] = term;
    term = -term * std::numbers::pi * std::numbers::pi / ((j + 1) * (j + 2));
  }
  std::vector<double> p(c.begin(), c.begin() + m + 1);
  std::vector<double> q(c.begin(), c.begin() + n + 1);
  for (auto& x : q) x = -x;
  return Blend<double>(0.0, 1.0, std::move(p), std::move(q));
}

/// Taylor coefficients of exp(-1/x) about x = 1, divided by exp(-1):
/// r_0 = r_1 = 1 and (k+1) r_{k+1} = (1 - 2k) r_k - (k - 1) r_{k-1},
/// from x^2 f' = f expanded at x = 1 + t.
[[nodiscard]] inline std::vector<Rational> exp_recip_taylor_ratios(int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  std::vector<Rational> r(static_cast<std::size_t>(order + 1));
  r[0] = 1;
  if (order >= 1) r[1] = 1;
  for (int k = 1; k < order; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    r[ku + 1] = (Rational(1 - 2 * k) * r[ku] - Rational(k - 1) * r[ku - 1]) / (k + 1);
  }
  return r;
}

/// exp(-1/s): every right-sided derivative at s = 0 vanishes (p is all
/// zeros); q_j = r_j exp(-1) from the exact recurrence.
[[nodiscard]] inline Blend<double> gen_exp_recip(int m, int n) {
  detail::check_orders(m, n);
  const auto ratios = exp_recip_taylor_ratios(n);
  const double e_inv = std::exp(-1.0);
  std::vector<double> q;
  q.reserve(ratios.size());
  for (const auto& r : ratios) q.push_back(to_double(r) * e_inv);
  return Blend<double>(0.0, 1.0, std::vector<double>(static_cast<std::size_t>(m + 1), 0.0), std::move(q));
}

/// Step from -1 at s = 0 to 1 at s = 1 with all higher derivatives zero.
[[nodiscard]] inline Blend<double> gen_step(int m, int n) {
  detail::check_orders(m, n);
  std::vector<double> p(static_cast<std::size_t>(m + 1), 0.0);
  std::vector<double> q(static_cast<std::size_t>(n + 1), 0.0);
  p[0] = -1;
  q[0] = 1;
  return Blend<double>(0.0, 1.0, std::move(p), std::move(q));
}

/// Taylor coefficients of sum c_k z^k about z = x0, up to `order`, by
/// repeated synthetic division.
template <typename T>
[[nodiscard]] std::vector<T> taylor_shift(std::span<const T> coeffs, const T& x0, int order) {
  std::vector<T> work(coeffs.begin(), coeffs.end());
  std::vector<T> out(static_cast<std::size_t>(order + 1), T(0));
  for (int j = 0; j <= order && !work.empty(); ++j) {
    // Divide work by (z - x0): remainder is the j-th Taylor coefficient.
    for (std::size_t k = work.size() - 1; k > 0; --k) work[k - 1] = work[k - 1] + x0 * work[k];
    out[static_cast<std::size_t>(j)] = work.front();
    work.erase(work.begin());
  }
  return out;
}

/// Blend of the polynomial sum coeffs[k] z^k on [a, b] with grade (m, n).
template <typename T>
[[nodiscard]] Blend<T> gen_poly(std::span<const T> coeffs, const T& a, const T& b, int m, int n) {
  detail::check_orders(m, n);
  if (coeffs.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  const T h = b - a;
  auto scaled = [&](const T& x0, int order) {
    auto c = taylor_shift(coeffs, x0, order);
    T hj = T(1);
    for (auto& x : c) {
      x = x * hj;
      hj = hj * h;
    }
    return c;
  };
  return Blend<T>(a, b, scaled(a, m), scaled(b, n));
}

template <typename T>
[[nodiscard]] Blend<T> gen_poly(const std::vector<T>& coeffs, const T& a, const T& b, int m, int n) {
  return gen_poly<T>(std::span<const T>(coeffs), a, b, m, n);
}

}  // namespace blend
