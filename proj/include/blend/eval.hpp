// SPDX-License-Identifier: MIT
#pragma once

/// \file eval.hpp
/// Linear-cost evaluation of blends and any number of their derivatives.
///
/// Each blend is the sum of two "half sums". The left half sum is
///
///   sum_j [ sum_{k<=m-j} C(n+k,k) s^(k+j) ] (1-s)^(n+1) p_j
///
/// and the right half sum is the same expression with m and n exchanged,
/// s replaced by 1-s and q_j replaced by (-1)^j q_j. Both go through
/// `hsf`, which folds the binomials into a running product
/// a_k = a_{k-1} (n+k) sigma / k so the magnitudes stay small for
/// sigma in [0, 1], and never expands powers of 1 - sigma.

#include <blend/core.hpp>
#include <blend/jet.hpp>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <vector>

namespace blend {

/// Scalar type produced by evaluating a Blend<T> at a point of type S.
template <typename T, typename S>
using eval_result_t = std::common_type_t<T, S>;

/// Dense row-major matrix, used for point-by-derivative grids.
template <typename T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  [[nodiscard]] T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  [[nodiscard]] const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  [[nodiscard]] std::span<const T> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
  [[nodiscard]] bool empty() const noexcept { return rows == 0; }
};

namespace detail {

/// sigma as a first-order jet: value + slope * t.
template <typename R>
struct Affine {
  R value;
  R slope;
};

template <typename V>
struct scalar_of {
  using type = V;
};
template <typename R>
struct scalar_of<Jet<R>> {
  using type = R;
};

template <typename R>
void mul_sigma(R& x, const R& sigma) {
  x = x * sigma;
}
template <typename R>
void mul_sigma(Jet<R>& x, const Affine<R>& sigma) {
  x.mul_affine(sigma.value, sigma.slope);
}

template <typename R, typename W>
void add_scaled(R& x, const R& y, const W& w) {
  x = y * w + x;
}
template <typename R, typename W>
void add_scaled(Jet<R>& x, const Jet<R>& y, const W& w) {
  x.add_scaled(y, w);
}

/// The half-sum loop shared by the value and jet paths. `one` is the unit
/// of V (1 or the constant jet 1). The partial sums of the a_k are
/// produced in the order the Horner accumulation consumes them, so no
/// working array is needed.
template <typename V, typename Sigma, typename W>
V half_sum(int m, int n, const Sigma& sigma, const Sigma& complement, std::span<const W> w, const V& one) {
  using R = typename scalar_of<V>::type;
  if (m < 0) {
    V zero = one;
    zero *= R(0);
    return zero;
  }
  V term = one;     // C(n+k, k) sigma^k
  V partial = one;  // sum_{i<=k} C(n+i, i) sigma^i
  V u = one;
  u *= w[static_cast<std::size_t>(m)];
  for (int k = 1; k <= m; ++k) {
    mul_sigma(term, sigma);
    term *= R(n + k);
    term /= R(k);
    partial += term;
    mul_sigma(u, sigma);
    add_scaled(u, partial, w[static_cast<std::size_t>(m - k)]);
  }
  V c = one;
  for (int j = 1; j <= n + 1; ++j) mul_sigma(c, complement);
  return c * u;
}

/// Scalar used for jet accumulation. Derivative coefficients come out of a
/// product whose factors carry binomial-sized coefficients of alternating
/// sign, so binary64 inputs are accumulated in extended precision.
template <typename R>
struct jet_scalar {
  using type = R;
};
template <>
struct jet_scalar<double> {
  using type = long double;
};
template <>
struct jet_scalar<std::complex<double>> {
  using type = std::complex<long double>;
};

template <typename T>
std::vector<T> alternate_signs(std::span<const T> q) {
  std::vector<T> out(q.begin(), q.end());
  for (std::size_t j = 1; j < out.size(); j += 2) out[j] = -out[j];
  return out;
}

}  // namespace detail

/// One half sum of a grade (m, n) blend at sigma with weights w (size m+1).
/// m == -1 (empty w) yields zero.
template <typename R, typename W>
[[nodiscard]] R hsf(int m, int n, const R& sigma, std::span<const W> w) {
  if (m < -1 || n < -1) throw std::invalid_argument("hsf: orders must be >= -1");
  if (w.size() != static_cast<std::size_t>(m + 1)) throw std::invalid_argument("hsf: weight count must be m+1");
  const R complement = R(1) - sigma;
  return detail::half_sum<R>(m, n, sigma, complement, w, R(1));
}

template <typename R, typename W>
[[nodiscard]] R hsf(int m, int n, const R& sigma, const std::vector<W>& w) {
  return hsf<R, W>(m, n, sigma, std::span<const W>(w));
}

/// A blend with its right-hand coefficients pre-alternated, for repeated
/// evaluation at many points.
template <typename T>
class PreparedBlend {
 public:
  explicit PreparedBlend(const Blend<T>& blend)
      : blend_(blend), q_alt_(detail::alternate_signs<T>(blend.q())) {}

  [[nodiscard]] const Blend<T>& blend() const noexcept { return blend_; }

  /// Value at s (s-units).
  template <typename S>
  [[nodiscard]] eval_result_t<T, S> operator()(const S& s) const {
    using R = eval_result_t<T, S>;
    const int m = blend_.m();
    const int n = blend_.n();
    const R sigma = R(s);
    const R rho = R(1) - sigma;
    return detail::half_sum<R>(m, n, sigma, R(R(1) - sigma), blend_.p(), R(1)) +
           detail::half_sum<R>(n, m, rho, R(R(1) - rho), std::span<const T>(q_alt_), R(1));
  }

  /// d^k H / dz^k for k = 0..nder at z = a + s h. Entry 0 is the value
  /// from operator(), so it agrees bit for bit with plain evaluation.
  template <typename S>
  [[nodiscard]] std::vector<eval_result_t<T, S>> derivatives(const S& s, std::size_t nder) const {
    using R = eval_result_t<T, S>;
    using A = typename detail::jet_scalar<R>::type;
    const int m = blend_.m();
    const int n = blend_.n();
    const A sigma = A(R(s));
    const A rho = A(1) - sigma;
    const Jet<A> one(nder, A(1));
    std::vector<A> p(blend_.p().begin(), blend_.p().end());
    std::vector<A> q(q_alt_.begin(), q_alt_.end());
    // d(sigma)/ds = 1 and d(1 - sigma)/ds = -1.
    const detail::Affine<A> left{sigma, A(1)};
    const detail::Affine<A> left_c{A(A(1) - sigma), A(-1)};
    const detail::Affine<A> right{rho, A(-1)};
    const detail::Affine<A> right_c{A(A(1) - rho), A(1)};
    Jet<A> jet = detail::half_sum(m, n, left, left_c, std::span<const A>(p), one);
    jet += detail::half_sum(n, m, right, right_c, std::span<const A>(q), one);

    std::vector<R> out(nder + 1);
    out[0] = (*this)(s);
    const A h = A(R(blend_.h()));
    A factor = A(1);  // k! / h^k
    for (std::size_t k = 1; k <= nder; ++k) {
      factor = factor * A(static_cast<int>(k)) / h;
      out[k] = R(jet[k] * factor);
    }
    return out;
  }

 private:
  Blend<T> blend_;
  std::vector<T> q_alt_;
};

/// Value of the blend at s, where z = a + s (b - a). Real or complex s;
/// accuracy is only guaranteed for real s in [0, 1].
template <typename T, typename S>
[[nodiscard]] eval_result_t<T, S> eval(const Blend<T>& blend, const S& s) {
  return PreparedBlend<T>(blend)(s);
}

/// Entry k is d^k H / dz^k at z = a + s h. Cost O((m + n) nder + nder^2).
template <typename T, typename S>
[[nodiscard]] std::vector<eval_result_t<T, S>> eval_derivatives(const Blend<T>& blend, const S& s,
                                                                std::size_t nder) {
  return PreparedBlend<T>(blend).derivatives(s, nder);
}

/// Row i holds eval_derivatives(blend, points[i], nder). `threads` = 0
/// uses every hardware thread; rows are independent.
template <typename T, typename S>
[[nodiscard]] Matrix<eval_result_t<T, S>> eval_grid(const Blend<T>& blend, std::span<const S> points,
                                                    std::size_t nder, unsigned threads = 1) {
  using R = eval_result_t<T, S>;
  Matrix<R> out(points.size(), nder + 1);
  if (points.empty()) return out;
  const PreparedBlend<T> prepared(blend);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (nder == 0) {
        out(i, 0) = prepared(points[i]);
      } else {
        auto row = prepared.derivatives(points[i], nder);
        std::copy(row.begin(), row.end(), out.data.begin() + static_cast<std::ptrdiff_t>(i * out.cols));
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, points.size()));
  if (threads <= 1) {
    work(0, points.size());
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (points.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(points.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
  return out;
}

template <typename T, typename S>
[[nodiscard]] Matrix<eval_result_t<T, S>> eval_grid(const Blend<T>& blend, const std::vector<S>& points,
                                                    std::size_t nder, unsigned threads = 1) {
  return eval_grid<T, S>(blend, std::span<const S>(points), nder, threads);
}

}  // namespace blend
