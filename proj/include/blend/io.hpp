// SPDX-License-Identifier: MIT
#pragma once

/// \file io.hpp
/// JSON spec files for blends and blend strings.
///
///   blend:  {"a": 0, "b": 1, "p": [-1], "q": [1]}        (optional "m", "n")
///   string: {"knots": [0, 1, 2], "taylor": [[0, 0], [1, 2], [4, 4]]}
///
/// Scalars may be JSON numbers or decimal/fraction strings ("0.1", "1/3");
/// strings are parsed exactly before any rounding.

#include <blend/core.hpp>
#include <blend/rational.hpp>
#include <blend/string.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace blend {

using json = nlohmann::json;

/// Malformed spec content (as opposed to an unreadable file).
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Rational json_rational(const json& v, const std::string& what) {
  try {
    if (v.is_number_integer()) return Rational(BigInt(v.get<long long>()));
    if (v.is_number_unsigned()) return Rational(BigInt(v.get<unsigned long long>()));
    if (v.is_number_float()) return to_rational(v.get<double>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    throw SpecError(what + ": " + e.what());
  }
  throw SpecError(what + ": expected a number or a decimal string");
}

template <typename T>
T json_scalar(const json& v, const std::string& what) {
  if constexpr (std::is_same_v<T, Rational>) {
    return json_rational(v, what);
  } else {
    if (v.is_number()) return T(v.get<double>());
    if (v.is_string()) return T(to_double(json_rational(v, what)));
    throw SpecError(what + ": expected a number or a decimal string");
  }
}

template <typename T>
std::vector<T> json_array(const json& v, const std::string& what) {
  if (!v.is_array()) throw SpecError(what + ": expected an array");
  std::vector<T> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(json_scalar<T>(v[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

inline const json& require(const json& obj, const char* key) {
  if (!obj.is_object()) throw SpecError("spec must be a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SpecError(std::string("missing key \"") + key + "\"");
  return *it;
}

inline std::optional<int> optional_order(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_number_integer()) throw SpecError(std::string("\"") + key + "\" must be an integer");
  return it->get<int>();
}

}  // namespace detail

[[nodiscard]] inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
}

[[nodiscard]] inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

template <typename T = double>
[[nodiscard]] Blend<T> blend_from_json(const json& spec) {
  T a = detail::json_scalar<T>(detail::require(spec, "a"), "a");
  T b = detail::json_scalar<T>(detail::require(spec, "b"), "b");
  auto p = detail::json_array<T>(detail::require(spec, "p"), "p");
  auto q = detail::json_array<T>(detail::require(spec, "q"), "q");
  try {
    return new_blend<T>(std::move(a), std::move(b), std::move(p), std::move(q), detail::optional_order(spec, "m"),
                        detail::optional_order(spec, "n"));
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

template <typename T = double>
[[nodiscard]] BlendString<T> string_from_json(const json& spec) {
  auto knots = detail::json_array<T>(detail::require(spec, "knots"), "knots");
  const json& tj = detail::require(spec, "taylor");
  if (!tj.is_array()) throw SpecError("taylor: expected an array of arrays");
  std::vector<std::vector<T>> taylor;
  for (std::size_t i = 0; i < tj.size(); ++i) taylor.push_back(detail::json_array<T>(tj[i], "taylor[" + std::to_string(i) + "]"));
  try {
    return BlendString<T>(std::move(knots), std::move(taylor));
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

/// Integral values are written as JSON integers, everything else in
/// shortest round-trip form, so reading the output back reproduces every
/// coefficient bit for bit.
[[nodiscard]] inline json number_json(double x) {
  if (std::isfinite(x) && x == std::trunc(x) && std::fabs(x) < 0x1p53) return json(static_cast<std::int64_t>(x));
  return json(x);
}

[[nodiscard]] inline json number_array_json(std::span<const double> xs) {
  json arr = json::array();
  for (double x : xs) arr.push_back(number_json(x));
  return arr;
}

[[nodiscard]] inline json to_json(const Blend<double>& blend) {
  json out = json::object();
  out["a"] = number_json(blend.a());
  out["b"] = number_json(blend.b());
  out["p"] = number_array_json(blend.p());
  out["q"] = number_array_json(blend.q());
  return out;
}

[[nodiscard]] inline json to_json(const Blend<Rational>& blend) {
  auto strs = [](std::span<const Rational> c) {
    json arr = json::array();
    for (const auto& x : c) arr.push_back(to_fraction_string(x));
    return arr;
  };
  json out = json::object();
  out["a"] = to_fraction_string(blend.a());
  out["b"] = to_fraction_string(blend.b());
  out["p"] = strs(blend.p());
  out["q"] = strs(blend.q());
  return out;
}

[[nodiscard]] inline json to_json(const BlendString<double>& bs) {
  json out = json::object();
  out["knots"] = number_array_json(bs.knots());
  json taylor = json::array();
  for (const auto& t : bs.taylor()) taylor.push_back(number_array_json(t));
  out["taylor"] = std::move(taylor);
  return out;
}

}  // namespace blend
