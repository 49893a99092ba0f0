// SPDX-License-Identifier: MIT
#pragma once

/// \file rational.hpp
/// Exact integer/rational arithmetic used for quadrature weights, the
/// reference evaluator and the exp(-1/x) coefficient recurrence.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace blend {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

[[nodiscard]] inline BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

[[nodiscard]] inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Exact rational value of a finite binary64 number.
[[nodiscard]] inline Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value has no rational form");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // mant in [0.5, 1): scale to a 53-bit integer.
  auto num = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r{BigInt(num)};
  if (exp > 0) {
    r *= Rational(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

/// Nearest binary64 to an exact rational.
[[nodiscard]] inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "-12", "3.25", "1e-3", "-0.5E+2" or "22/7" exactly.
[[nodiscard]] inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("not a decimal or fraction: '" + std::string(text) + "'"); };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';

  BigInt digits = 0;
  int scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (seen_point) --scale;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) fail();

  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') fail();
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
    if (i == text.size()) fail();
    long exp = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail();
      exp = exp * 10 + (text[i] - '0');
      if (exp > 100000) throw std::out_of_range("exponent too large in '" + std::string(text) + "'");
    }
    scale += static_cast<int>(exp_negative ? -exp : exp);
  }

  Rational r{digits};
  if (scale > 0) r *= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(scale)));
  if (scale < 0) r /= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-scale)));
  return negative ? Rational(-r) : r;
}

/// "p/q" in lowest terms, or "p" for integers.
[[nodiscard]] inline std::string to_fraction_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace blend
