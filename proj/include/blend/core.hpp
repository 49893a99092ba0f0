// SPDX-License-Identifier: MIT
#pragma once

/// \file core.hpp
/// The blend data model: two truncated Taylor series, one at each end of an
/// interval [a, b], stored in the unit variable s = (z - a) / (b - a).

#include <blend/rational.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace blend {

/// Two-point Hermite interpolant of grade m + n + 1.
///
/// `p[j]` is f^(j)(a) h^j / j! and `q[j]` is f^(j)(b) h^j / j!, h = b - a.
/// Either side (but not both) may be empty; such one-sided blends are
/// plain Taylor polynomials about the other end. Grade, not degree, is the
/// contract: trailing zero coefficients are kept as given.
template <typename T>
class Blend {
 public:
  using value_type = T;

  Blend(T a, T b, std::vector<T> p, std::vector<T> q)
      : a_(std::move(a)), b_(std::move(b)), p_(std::move(p)), q_(std::move(q)) {
    if (a_ == b_) throw std::invalid_argument("blend endpoints must differ");
    if (p_.empty() && q_.empty()) throw std::invalid_argument("blend needs Taylor data at one end at least");
  }

  [[nodiscard]] const T& a() const noexcept { return a_; }
  [[nodiscard]] const T& b() const noexcept { return b_; }
  [[nodiscard]] T h() const { return b_ - a_; }

  [[nodiscard]] std::span<const T> p() const noexcept { return p_; }
  [[nodiscard]] std::span<const T> q() const noexcept { return q_; }

  /// Order of the left series; -1 when the left side is empty.
  [[nodiscard]] int m() const noexcept { return static_cast<int>(p_.size()) - 1; }
  /// Order of the right series; -1 when the right side is empty.
  [[nodiscard]] int n() const noexcept { return static_cast<int>(q_.size()) - 1; }
  [[nodiscard]] int grade() const noexcept { return m() + n() + 1; }

  friend bool operator==(const Blend&, const Blend&) = default;

 private:
  T a_;
  T b_;
  std::vector<T> p_;
  std::vector<T> q_;
};

/// Builds a blend from already scaled coefficients. `m`/`n`, when given,
/// truncate longer arrays to that order (-1 drops the side entirely).
template <typename T>
[[nodiscard]] Blend<T> new_blend(T a, T b, std::vector<T> p, std::vector<T> q,
                                 std::optional<int> m = std::nullopt, std::optional<int> n = std::nullopt) {
  auto truncate = [](std::vector<T>& v, std::optional<int> order, const char* side) {
    if (!order) return;
    if (*order < -1) throw std::invalid_argument(std::string("negative order for ") + side);
    if (static_cast<std::size_t>(*order + 1) > v.size())
      throw std::invalid_argument(std::string("requested order exceeds available ") + side + " coefficients");
    v.resize(static_cast<std::size_t>(*order + 1));
  };
  truncate(p, m, "p");
  truncate(q, n, "q");
  return Blend<T>(std::move(a), std::move(b), std::move(p), std::move(q));
}

/// Builds a blend from raw derivative values f^(j)(a) and f^(j)(b).
template <typename T>
[[nodiscard]] Blend<T> from_derivatives(T a, T b, std::span<const T> dp, std::span<const T> dq) {
  if (a == b) throw std::invalid_argument("blend endpoints must differ");
  const T h = b - a;
  auto scale = [&](std::span<const T> d) {
    std::vector<T> out(d.size());
    T factor = T(1);  // h^j / j!
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j > 0) factor = factor * h / T(static_cast<int>(j));
      out[j] = d[j] * factor;
    }
    return out;
  };
  return Blend<T>(a, b, scale(dp), scale(dq));
}

template <typename T>
[[nodiscard]] Blend<T> from_derivatives(T a, T b, const std::vector<T>& dp, const std::vector<T>& dq) {
  return from_derivatives<T>(std::move(a), std::move(b), std::span<const T>(dp), std::span<const T>(dq));
}

/// Blend of g(s) = f(1 - s): endpoints swap and odd coefficients change sign.
template <typename T>
[[nodiscard]] Blend<T> reflect(const Blend<T>& blend) {
  auto flip = [](std::span<const T> c) {
    std::vector<T> out(c.begin(), c.end());
    for (std::size_t j = 1; j < out.size(); j += 2) out[j] = -out[j];
    return out;
  };
  return Blend<T>(blend.b(), blend.a(), flip(blend.q()), flip(blend.p()));
}

/// Same data, different scalar type (e.g. exact rationals to binary64).
template <typename U, typename T, typename Convert>
[[nodiscard]] Blend<U> convert(const Blend<T>& blend, Convert&& cvt) {
  auto map = [&](std::span<const T> c) {
    std::vector<U> out;
    out.reserve(c.size());
    for (const auto& x : c) out.push_back(cvt(x));
    return out;
  };
  return Blend<U>(cvt(blend.a()), cvt(blend.b()), map(blend.p()), map(blend.q()));
}

}  // namespace blend
