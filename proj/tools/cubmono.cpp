// Command-line front end: lines, monodromy and verify.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "cubmono/error.hpp"
#include "cubmono/monodromy.hpp"
#include "cubmono/serialize.hpp"
#include "cubmono/surface_lines.hpp"
#include "cubmono/verify.hpp"

namespace {

using namespace cubmono;

enum Exit { kOk = 0, kVerifyFail = 1, kInvalidInput = 2, kAmbiguous = 3 };

struct Global {
  double tol = 1e-8;
  std::string precision = "double";
};

std::complex<double> parse_lambda(const std::string& s) {
  std::size_t used = 0;
  const auto comma = s.find(',');
  try {
    const double re = std::stod(s.substr(0, comma), &used);
    if (used != (comma == std::string::npos ? s.size() : comma)) throw std::invalid_argument(s);
    if (comma == std::string::npos) return {re, 0.0};
    const std::string im_text = s.substr(comma + 1);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidInput, "lambda must be RE or RE,IM, got '" + s + "'");
  }
}

/// Runs body<double>, retrying body<long double> on numerical ambiguity unless
/// extended precision was requested from the start.
template <class Body>
int with_precision(const Global& g, Body&& body) {
  try {
    if (g.precision == "extended") return body(static_cast<long double>(0));
    try {
      return body(0.0);
    } catch (const Error& e) {
      if (!is_numerical_ambiguity(e.kind())) throw;
      std::cerr << "note: " << e.what() << "; retrying in extended precision\n";
      return body(static_cast<long double>(0));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (is_numerical_ambiguity(e.kind())) return kAmbiguous;
    if (e.kind() == ErrorKind::InvalidInput || e.kind() == ErrorKind::SingularParameter ||
        e.kind() == ErrorKind::FixtureLoad)
      return kInvalidInput;
    return kVerifyFail;
  }
}

int cmd_lines(const Global& g, const std::string& lambda_text, const std::string& format) {
  return with_precision(g, [&](auto zero) {
    using R = decltype(zero);
    const auto l = parse_lambda(lambda_text);
    const Complex<R> lambda(static_cast<R>(l.real()), static_cast<R>(l.imag()));
    Tolerances tol;
    tol.incidence = g.tol;
    const auto s = analyze_surface(family_lambda<R>(lambda), tol);
    if (format == "json")
      std::cout << surface_json(s, lambda).dump(2) << '\n';
    else
      std::cout << surface_text(s, lambda);
    return int(kOk);
  });
}

int cmd_monodromy(const Global& g, const std::string& loop, int steps, const std::string& format,
                  const std::string& series) {
  return with_precision(g, [&](auto zero) {
    using R = decltype(zero);
    const auto lp = loop_by_name<R>(loop);
    Tolerances tol;
    tol.incidence = g.tol;
    const auto base = analyze_surface(family_lambda<R>(Complex<R>(0)), tol);
    TrackingConfig cfg;
    cfg.steps = steps;
    const auto r = monodromy(lp, base, cfg);
    if (format == "json") {
      auto j = monodromy_json(r);
      j["loop"] = loop;
      std::cout << j.dump(2) << '\n';
    } else if (format == "csv") {
      std::cout << tracks_csv(r, series == "y" ? TrackSeries::Y : TrackSeries::X);
    } else {
      std::cout << "loop " << loop << '\n' << monodromy_text(r);
    }
    return int(kOk);
  });
}

int cmd_verify(const Global& g, const std::string& scope, const std::string& format) {
  try {
    VerifyOptions opts;
    opts.scope = scope_from_string(scope);
    opts.tol = g.tol;
    opts.precision = g.precision == "extended" ? Precision::Extended : Precision::Double;
    const auto report = run_verification(opts);
    if (format == "json")
      std::cout << report.to_json().dump(2) << '\n';
    else
      std::cout << report.to_text();
    if (report.numerical_ambiguity()) return kAmbiguous;
    return report.passed() ? kOk : kVerifyFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidInput ? kInvalidInput : kVerifyFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monodromy of the cubic surfaces w^3 = f over the pencil of plane cubics"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--tol", g.tol, "Incidence tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--precision", g.precision, "Floating-point precision")
      ->capture_default_str()
      ->check(CLI::IsMember({"double", "extended"}));

  auto* lines = app.add_subcommand("lines", "The 27 lines of V(w^3 - f_lambda)");
  std::string lambda = "0", lines_format = "text";
  lines->add_option("--lambda", lambda, "Parameter as RE or RE,IM")->capture_default_str();
  lines->add_option("--format", lines_format)->capture_default_str()->check(CLI::IsMember({"text", "json"}));

  auto* mono = app.add_subcommand("monodromy", "Track roots, flexes and lines around a loop based at 0");
  std::string loop, mono_format = "text", series = "x";
  int steps = 100;
  mono->add_option("loop", loop, "gamma-minus, gamma-plus or constant")->required();
  mono->add_option("--steps", steps)->capture_default_str()->check(CLI::PositiveNumber);
  mono->add_option("--format", mono_format)->capture_default_str()->check(CLI::IsMember({"text", "json", "csv"}));
  mono->add_option("--series", series, "CSV series: x (roots) or y (flex y-coordinates)")
      ->capture_default_str()
      ->check(CLI::IsMember({"x", "y"}));

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  std::string scope = "all", verify_format = "text";
  verify->add_option("--scope", scope)->capture_default_str()->check(CLI::IsMember({"fixtures", "pipeline", "all"}));
  verify->add_option("--format", verify_format)->capture_default_str()->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  if (*lines) return cmd_lines(g, lambda, lines_format);
  if (*mono) return cmd_monodromy(g, loop, steps, mono_format, series);
  return cmd_verify(g, scope, verify_format);
}
