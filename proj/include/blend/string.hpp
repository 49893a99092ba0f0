// SPDX-License-Identifier: MIT
#pragma once

/// \file string.hpp
/// Strings of blends: piecewise blends over a knot sequence where
/// neighbouring pieces share the Taylor data of their common knot.

#include <blend/calculus.hpp>
#include <blend/core.hpp>
#include <blend/eval.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace blend {

/// Piecewise blend on knots z_0 < ... < z_K.
///
/// `taylor[i][j]` is f^(j)(z_i) / j!, not scaled by any interval width;
/// piece i applies its own h_i = z_{i+1} - z_i. Pieces are half-open
/// [z_i, z_{i+1}) except the last, which is closed.
template <typename T = double>
class BlendString {
 public:
  BlendString(std::vector<T> knots, std::vector<std::vector<T>> taylor)
      : knots_(std::move(knots)), taylor_(std::move(taylor)) {
    if (knots_.size() < 2) throw std::invalid_argument("blend string needs at least two knots");
    if (taylor_.size() != knots_.size()) throw std::invalid_argument("blend string needs one Taylor array per knot");
    for (std::size_t i = 0; i < knots_.size(); ++i) {
      if (taylor_[i].empty()) throw std::invalid_argument("empty Taylor array at knot " + std::to_string(i));
      if (i > 0 && !(knots_[i - 1] < knots_[i])) throw std::invalid_argument("knots must be strictly increasing");
    }
    pieces_.reserve(knots_.size() - 1);
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) pieces_.emplace_back(make_piece(i));
  }

  [[nodiscard]] const std::vector<T>& knots() const noexcept { return knots_; }
  [[nodiscard]] const std::vector<std::vector<T>>& taylor() const noexcept { return taylor_; }
  [[nodiscard]] std::size_t size() const noexcept { return pieces_.size(); }
  [[nodiscard]] const Blend<T>& piece(std::size_t i) const { return pieces_.at(i).blend(); }

  /// Index of the piece containing z.
  [[nodiscard]] std::size_t locate(const T& z) const {
    if (z < knots_.front() || z > knots_.back()) throw std::out_of_range("point outside the knot range");
    auto it = std::upper_bound(knots_.begin(), knots_.end(), z);
    auto i = static_cast<std::size_t>(it - knots_.begin());
    return std::min(i - 1, pieces_.size() - 1);
  }

  /// d^k/dz^k of the string at z for k = 0..nder.
  [[nodiscard]] std::vector<T> eval(const T& z, std::size_t nder = 0) const {
    const std::size_t i = locate(z);
    const auto& piece = pieces_[i];
    const T s = (z - knots_[i]) / (knots_[i + 1] - knots_[i]);
    return piece.derivatives(s, nder);
  }

 private:
  PreparedBlend<T> make_piece(std::size_t i) const {
    const T h = knots_[i + 1] - knots_[i];
    auto scale = [&](const std::vector<T>& c) {
      std::vector<T> out(c.size());
      T hj = T(1);
      for (std::size_t j = 0; j < c.size(); ++j) {
        out[j] = c[j] * hj;
        hj = hj * h;
      }
      return out;
    };
    return PreparedBlend<T>(Blend<T>(knots_[i], knots_[i + 1], scale(taylor_[i]), scale(taylor_[i + 1])));
  }

  std::vector<T> knots_;
  std::vector<std::vector<T>> taylor_;
  std::vector<PreparedBlend<T>> pieces_;
};

template <typename T>
[[nodiscard]] std::vector<T> string_eval(const BlendString<T>& bs, const T& z, std::size_t nder = 0) {
  return bs.eval(z, nder);
}

/// Composite rule: sum of h_i * integral of piece i, summed left to right.
template <typename T>
[[nodiscard]] T string_integrate(const BlendString<T>& bs) {
  T total = T(0);
  for (std::size_t i = 0; i < bs.size(); ++i) total += integrate(bs.piece(i));
  return total;
}

/// String of F(z) = F0 + integral_{z_0}^z f. Each knot gains one order;
/// the knot values are the running sums of the piece integrals.
template <typename T>
[[nodiscard]] BlendString<T> string_antiderivative(const BlendString<T>& bs, const T& initial) {
  const auto& knots = bs.knots();
  std::vector<std::vector<T>> taylor(knots.size());
  T running = initial;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (i > 0) running += integrate(bs.piece(i - 1));
    const auto& c = bs.taylor()[i];
    auto& out = taylor[i];
    out.reserve(c.size() + 1);
    out.push_back(running);
    for (std::size_t j = 0; j < c.size(); ++j) out.push_back(T(c[j] / T(static_cast<int>(j + 1))));
  }
  return BlendString<T>(knots, std::move(taylor));
}

}  // namespace blend
