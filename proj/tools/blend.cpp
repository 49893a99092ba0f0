// SPDX-License-Identifier: MIT
//
// blend: command-line front end for two-point Taylor blends.
//
// Exit codes: 0 success, 1 unexpected failure, 2 invalid input (spec,
// points or arguments), 3 I/O failure. Data goes to stdout, diagnostics
// to stderr.

#include <blend/blend.hpp>
#include <blend/io.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0) x = 0.0;  // no "-0"
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

double parse_scalar(const std::string& text, const char* what) {
  try {
    return blend::to_double(blend::parse_rational(text));
  } catch (const std::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

/// "start:end:count" with inclusive endpoints; point i is
/// start + i (end - start) / (count - 1) and the last point is end exactly.
std::vector<double> parse_points(const std::string& spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
  if (c2 == std::string::npos || spec.find(':', c2 + 1) != std::string::npos)
    throw InputError("points spec must look like start:end:count, got '" + spec + "'");
  const double start = parse_scalar(spec.substr(0, c1), "points start");
  const double end = parse_scalar(spec.substr(c1 + 1, c2 - c1 - 1), "points end");
  const std::string count_text = spec.substr(c2 + 1);
  long long count = 0;
  auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
  if (ec != std::errc() || ptr != count_text.data() + count_text.size())
    throw InputError("points count must be an integer, got '" + count_text + "'");
  if (count < 2) throw InputError("points count must be at least 2");
  if (count > 100'000'000) throw InputError("points count too large");
  std::vector<double> pts(static_cast<std::size_t>(count));
  const double width = end - start;
  for (long long i = 0; i < count; ++i) pts[static_cast<std::size_t>(i)] = start + static_cast<double>(i) * width / static_cast<double>(count - 1);
  pts.back() = end;
  return pts;
}

std::vector<double> collect_points(const std::string& points_spec, const std::vector<std::string>& at) {
  if (!points_spec.empty() && !at.empty()) throw InputError("use either --points or --at, not both");
  if (!points_spec.empty()) return parse_points(points_spec);
  if (at.empty()) throw InputError("no evaluation points: give --points start:end:count or --at VALUE");
  std::vector<double> pts;
  for (const auto& s : at) pts.push_back(parse_scalar(s, "--at"));
  return pts;
}

unsigned thread_count() {
  const char* env = std::getenv("BLEND_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  unsigned value = 0;
  const std::string text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw InputError("BLEND_THREADS must be a nonnegative integer");
  return value;
}

blend::json load_json(const std::string& path) { return blend::parse_json_text(blend::read_text_file(path)); }

void write_csv_header(std::ostream& out, const char* first, std::size_t nder) {
  out << first;
  for (std::size_t k = 0; k <= nder; ++k) out << ",h" << k;
  out << '\n';
}

void warn_overflow(int m, int n) {
  if (auto w = blend::overflow_warning(m, n)) std::cerr << "warning: " << *w << '\n';
}

struct Options {
  std::string spec;
  std::string points;
  std::vector<std::string> at;
  std::size_t nder = 0;
  bool exact = false;
  std::string format;
  std::string initial = "0";
  int m = 0;
  int n = 0;
  std::string name;
};

int cmd_eval(const Options& o) {
  const auto blend = blend::blend_from_json<double>(load_json(o.spec));
  const auto points = collect_points(o.points, o.at);
  warn_overflow(blend.m(), blend.n());
  std::vector<double> s(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) s[i] = (points[i] - blend.a()) / blend.h();
  const auto grid = blend::eval_grid(blend, std::span<const double>(s), o.nder, thread_count());
  std::string buf;
  write_csv_header(std::cout, "z", o.nder);
  for (std::size_t i = 0; i < grid.rows; ++i) {
    buf = format_number(points[i]);
    for (double v : grid.row(i)) (buf += ',') += format_number(v);
    buf += '\n';
    std::cout << buf;
  }
  return kExitOk;
}

int cmd_integrate(const Options& o) {
  const auto spec = load_json(o.spec);
  if (o.exact) {
    const auto blend = blend::blend_from_json<blend::Rational>(spec);
    std::cout << blend::to_fraction_string(blend::integrate(blend)) << '\n';
  } else {
    const auto blend = blend::blend_from_json<double>(spec);
    std::cout << format_number(blend::integrate(blend)) << '\n';
  }
  return kExitOk;
}

int cmd_weights(const Options& o) {
  if (o.m < 0 || o.n < 0) throw InputError("weights: m and n must be >= 0");
  const auto rule = blend::quadrature_weights(o.m, o.n);
  const bool decimals = o.format == "decimals";
  std::cout << "side,j,weight\n";
  auto emit = [&](const char* side, const std::vector<blend::Rational>& w) {
    for (std::size_t j = 0; j < w.size(); ++j)
      std::cout << side << ',' << j << ','
                << (decimals ? format_number(blend::to_double(w[j])) : blend::to_fraction_string(w[j])) << '\n';
  };
  emit("p", rule.wp);
  emit("q", rule.wq);
  return kExitOk;
}

int cmd_lebesgue(const Options& o) {
  if (o.m < 0 || o.n < 0) throw InputError("lebesgue: m and n must be >= 0");
  const auto points = collect_points(o.points, o.at);
  std::cout << "s,L\n";
  for (double s : points) std::cout << format_number(s) << ',' << format_number(blend::lebesgue(o.m, o.n, s)) << '\n';
  return kExitOk;
}

int cmd_gen(const Options& o) {
  if (o.m < 0 || o.n < 0) throw InputError("gen: m and n must be >= 0");
  std::optional<blend::Blend<double>> b;
  if (o.name == "step") b = blend::gen_step(o.m, o.n);
  else if (o.name == "cospi") b = blend::gen_cospi(o.m, o.n);
  else if (o.name == "exp-recip" || o.name == "exp_recip") b = blend::gen_exp_recip(o.m, o.n);
  else throw InputError("unknown generator '" + o.name + "' (expected step, cospi or exp-recip)");
  std::cout << blend::to_json(*b).dump() << '\n';
  return kExitOk;
}

int cmd_antiderivative(const Options& o) {
  const auto spec = load_json(o.spec);
  if (o.exact) {
    const auto blend = blend::blend_from_json<blend::Rational>(spec);
    blend::Rational initial;
    try {
      initial = blend::parse_rational(o.initial);
    } catch (const std::exception& e) {
      throw InputError(std::string("--initial: ") + e.what());
    }
    std::cout << blend::to_json(blend::antiderivative_z(blend, initial)).dump() << '\n';
  } else {
    const auto blend = blend::blend_from_json<double>(spec);
    std::cout << blend::to_json(blend::antiderivative_z(blend, parse_scalar(o.initial, "--initial"))).dump() << '\n';
  }
  return kExitOk;
}

int cmd_string_eval(const Options& o) {
  const auto bs = blend::string_from_json<double>(load_json(o.spec));
  const auto points = collect_points(o.points, o.at);
  write_csv_header(std::cout, "z", o.nder);
  for (double z : points) {
    std::vector<double> row;
    try {
      row = bs.eval(z, o.nder);
    } catch (const std::out_of_range& e) {
      throw InputError("point " + format_number(z) + ": " + e.what());
    }
    std::cout << format_number(z);
    for (double v : row) std::cout << ',' << format_number(v);
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_string_integrate(const Options& o) {
  const auto bs = blend::string_from_json<double>(load_json(o.spec));
  std::cout << format_number(blend::string_integrate(bs)) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-point Taylor blends: evaluate, integrate, analyse"};
  app.require_subcommand(1);
  Options o;

  auto add_spec = [&](CLI::App* sub) { sub->add_option("--spec", o.spec, "Spec file (JSON)")->required(); };
  auto add_points = [&](CLI::App* sub) {
    sub->add_option("--points", o.points, "Grid start:end:count (inclusive)");
    sub->add_option("--at", o.at, "Single evaluation point (repeatable)");
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a blend and its derivatives at points (CSV)");
  add_spec(eval);
  add_points(eval);
  eval->add_option("--nder", o.nder, "Number of derivatives");
  add_format(eval, {"csv"});

  auto* integrate = app.add_subcommand("integrate", "Integral of a blend over [a, b]");
  add_spec(integrate);
  integrate->add_flag("--exact", o.exact, "Exact rational result");

  auto* weights = app.add_subcommand("weights", "Quadrature weights of a grade (m, n) blend");
  weights->add_option("m", o.m)->required();
  weights->add_option("n", o.n)->required();
  add_format(weights, {"fractions", "decimals", "csv"});

  auto* leb = app.add_subcommand("lebesgue", "Lebesgue function L_{m,n}(s) (CSV)");
  leb->add_option("m", o.m)->required();
  leb->add_option("n", o.n)->required();
  add_points(leb);
  add_format(leb, {"csv"});

  auto* gen = app.add_subcommand("gen", "Emit a blend spec for step, cospi or exp-recip");
  gen->add_option("name", o.name)->required();
  gen->add_option("m", o.m)->required();
  gen->add_option("n", o.n)->required();

  auto* anti = app.add_subcommand("antiderivative", "Blend of F(z) = F0 + integral_a^z H");
  add_spec(anti);
  anti->add_option("--initial", o.initial, "F0 (default 0)");
  anti->add_flag("--exact", o.exact, "Exact rational coefficients");

  auto* seval = app.add_subcommand("string-eval", "Evaluate a string of blends (CSV)");
  add_spec(seval);
  add_points(seval);
  seval->add_option("--nder", o.nder, "Number of derivatives");
  add_format(seval, {"csv"});

  auto* sint = app.add_subcommand("string-integrate", "Composite integral of a string of blends");
  add_spec(sint);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    int code = kExitInternal;
    if (eval->parsed()) code = cmd_eval(o);
    else if (integrate->parsed()) code = cmd_integrate(o);
    else if (weights->parsed()) code = cmd_weights(o);
    else if (leb->parsed()) code = cmd_lebesgue(o);
    else if (gen->parsed()) code = cmd_gen(o);
    else if (anti->parsed()) code = cmd_antiderivative(o);
    else if (seval->parsed()) code = cmd_string_eval(o);
    else if (sint->parsed()) code = cmd_string_integrate(o);
    std::cout.flush();
    if (!std::cout) {
      std::cerr << "error: writing to stdout failed\n";
      return kExitIo;
    }
    return code;
  } catch (const blend::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const blend::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
