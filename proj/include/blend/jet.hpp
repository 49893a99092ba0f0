// SPDX-License-Identifier: MIT
#pragma once

/// \file jet.hpp
/// Truncated Taylor polynomials ("jets") in one variable, used to carry
/// derivatives through the half-sum evaluation loop.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace blend {

/// Truncated Taylor polynomial c_0 + c_1 t + ... + c_order t^order.
///
/// Coefficient k is the k-th derivative divided by k!. Every operation
/// truncates at the same order, so a jet of lower order is always a prefix
/// of the same computation carried at higher order.
template <typename T>
class Jet {
 public:
  Jet() : c_(1, T(0)) {}
  explicit Jet(std::size_t order, T value = T(0)) : c_(order + 1, T(0)) { c_[0] = value; }

  /// The jet of the independent variable: value + t.
  static Jet variable(std::size_t order, T value) {
    Jet j(order, value);
    if (order > 0) j.c_[1] = T(1);
    return j;
  }

  [[nodiscard]] std::size_t order() const noexcept { return c_.size() - 1; }
  [[nodiscard]] std::span<const T> coeffs() const noexcept { return c_; }
  [[nodiscard]] const T& operator[](std::size_t k) const { return c_[k]; }
  [[nodiscard]] T& operator[](std::size_t k) { return c_[k]; }
  [[nodiscard]] const T& value() const { return c_[0]; }

  Jet& operator+=(const Jet& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  template <typename S>
  Jet& operator*=(const S& x) {
    for (auto& c : c_) c *= x;
    return *this;
  }
  template <typename S>
  Jet& operator/=(const S& x) {
    for (auto& c : c_) c /= x;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    *this = *this * o;
    return *this;
  }

  /// this += o * x
  template <typename S>
  Jet& add_scaled(const Jet& o, const S& x) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k] * x;
    return *this;
  }

  /// this *= (v + d t), O(order).
  Jet& mul_affine(const T& v, const T& d) {
    for (std::size_t k = c_.size() - 1; k > 0; --k) c_[k] = v * c_[k] + d * c_[k - 1];
    c_[0] = v * c_[0];
    return *this;
  }

  friend Jet operator+(Jet x, const Jet& y) { return x += y; }
  friend Jet operator-(Jet x, const Jet& y) { return x -= y; }
  friend Jet operator-(Jet x) {
    for (auto& c : x.c_) c = -c;
    return x;
  }
  /// Truncated Cauchy product, O(order^2).
  friend Jet operator*(const Jet& x, const Jet& y) {
    x.check(y);
    Jet r(x.order());
    for (std::size_t k = 0; k < x.c_.size(); ++k) {
      T acc = x.c_[0] * y.c_[k];
      for (std::size_t i = 1; i <= k; ++i) acc += x.c_[i] * y.c_[k - i];
      r.c_[k] = acc;
    }
    return r;
  }
  friend bool operator==(const Jet&, const Jet&) = default;

 private:
  void check(const Jet& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("jet orders differ");
  }

  std::vector<T> c_;
};

}  // namespace blend
