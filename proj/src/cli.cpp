#include "coseq/cli.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coseq/export.hpp"
#include "coseq/fourier.hpp"
#include "coseq/genfunc.hpp"
#include "coseq/numtheory.hpp"
#include "coseq/sequence.hpp"

namespace coseq::cli {

namespace {

enum class Method { closed, recurrence, fourier, exact_fourier, gf };
enum class Format { plain, csv, json };

// Exit code 1: the computation ran but a check or residual failed.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int64_t a = 0;
  int64_t b = 0;
  int64_t n = 0;
  int64_t from = 0;
  int64_t to = 0;
  int64_t terms = 1000;
  Method method = Method::closed;
  PeriodChoice choice = PeriodChoice::minimal;
  double tol = 1e-6;
  Format format = Format::plain;
};

const char* method_name(Method m) {
  switch (m) {
    case Method::closed: return "closed";
    case Method::recurrence: return "recurrence";
    case Method::fourier: return "fourier";
    case Method::exact_fourier: return "exact-fourier";
    case Method::gf: return "gf";
  }
  return "?";
}

// Evaluates the full-anchored sequence (P(1) = a + 1) by any method. The
// minimal period choice evaluates through the shorter recurrence and maps
// indices with the anchor shift, so every method and choice prints the same
// values.
class Evaluator {
 public:
  Evaluator(const FactoredModulus& mod, Method method, PeriodChoice choice,
            double tol, int64_t series_hint)
      : mod_(mod), method_(method), tol_(tol) {
    shift_ = choice == PeriodChoice::minimal ? full_anchor_shift(mod) : 0;
    switch (method) {
      case Method::closed:
      case Method::recurrence:
        params_ = make_params(mod, choice);
        break;
      case Method::fourier:
        expansion_ = solve_coefficients(mod, choice);
        break;
      case Method::exact_fourier: {
        params_ = make_params(mod, choice);
        table_ = make_residue_table(*params_);
        c0_ = Rat(params_->step, params_->period);
        break;
      }
      case Method::gf:
        if (series_hint >= 1) series_ = expand_gf(mod, series_hint);
        break;
    }
  }

  Int value_at(int64_t n) const {
    switch (method_) {
      case Method::closed:
        return eval_closed(*params_, n + shift_);
      case Method::recurrence:
        return eval_recurrence(*params_, n + shift_);
      case Method::fourier: {
        const FourierEval ev = eval_fourier(*expansion_, n + shift_);
        if (!(ev.residual() < tol_))
          throw verification_error(
              "fourier residual " + format_double17(ev.residual()) +
              " at n = " + std::to_string(n) +
              " exceeds tolerance; --method exact-fourier stays exact");
        return ev.rounded;
      }
      case Method::exact_fourier:
        return eval_exact(*table_, c0_, n + shift_);
      case Method::gf:
        if (n < 1 || !series_)
          throw std::invalid_argument(
              "--method gf reads the series coefficients and needs n >= 1");
        return numerator(series_->terms[static_cast<size_t>(n - 1)]);
    }
    throw std::logic_error("unreachable");
  }

 private:
  FactoredModulus mod_;
  Method method_;
  double tol_;
  int64_t shift_ = 0;
  std::optional<SequenceParams> params_;
  std::optional<FourierExpansion> expansion_;
  std::optional<ResidueTable> table_;
  Rat c0_;
  std::optional<SeriesExpansion> series_;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const FactoredModulus mod = factor(o.a);
  const Evaluator ev(mod, o.method, o.choice, o.tol, o.n);
  const Int value = ev.value_at(o.n);
  switch (o.format) {
    case Format::plain:
      out << value << '\n';
      break;
    case Format::csv:
      out << "n,value\n" << o.n << ',' << value << '\n';
      break;
    case Format::json: {
      nlohmann::ordered_json j;
      j["a"] = o.a;
      j["n"] = o.n;
      j["method"] = method_name(o.method);
      j["value"] = value.str();
      out << j.dump() << '\n';
      break;
    }
  }
  return 0;
}

int cmd_range(const Options& o, std::ostream& out) {
  if (o.from > o.to)
    throw std::invalid_argument("range needs --from <= --to");
  if (o.to - o.from + 1 > kMaxWindow)
    throw std::invalid_argument("range wider than 10^7 indices");
  if (o.method == Method::gf && o.from < 1)
    throw std::invalid_argument(
        "--method gf reads the series coefficients and needs --from >= 1");
  const FactoredModulus mod = factor(o.a);
  const Evaluator ev(mod, o.method, o.choice, o.tol, o.to);

  if (o.format == Format::json) {
    nlohmann::ordered_json j;
    j["a"] = o.a;
    j["from"] = o.from;
    j["to"] = o.to;
    j["method"] = method_name(o.method);
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (int64_t n = o.from; n <= o.to; ++n)
      values.push_back({{"n", n}, {"value", ev.value_at(n).str()}});
    j["values"] = std::move(values);
    out << j.dump() << '\n';
    return 0;
  }
  if (o.format == Format::csv) out << "n,value\n";
  const char sep = o.format == Format::csv ? ',' : ' ';
  for (int64_t n = o.from; n <= o.to; ++n)
    out << n << sep << ev.value_at(n) << '\n';
  return 0;
}

int cmd_coeffs(const Options& o, std::ostream& out) {
  const FactoredModulus mod = factor(o.a);
  const FourierExpansion fx = solve_coefficients(mod, o.choice);
  switch (o.format) {
    case Format::json:
      out << expansion_to_json(fx).dump(2) << '\n';
      break;
    case Format::csv: {
      out << "# a=" << mod.value << ",R=" << mod.radical
          << ",Q=" << mod.radical_totient << ",phi=" << mod.totient
          << ",period=" << fx.params.period << ",c0=" << format_rational(fx.c0)
          << '\n';
      out << "nu,re,im\n";
      for (size_t nu = 0; nu < fx.coeffs.size(); ++nu)
        out << nu << ',' << format_double17(fx.coeffs[nu].real()) << ','
            << format_double17(fx.coeffs[nu].imag()) << '\n';
      out << "# residues\nm,num,den\n";
      for (size_t j = 0; j < fx.residues.entries.size(); ++j) {
        const Rat& r = fx.residues.entries[j];
        out << (static_cast<int64_t>(j) - fx.params.period + 1) << ','
            << numerator(r) << ',' << denominator(r) << '\n';
      }
      break;
    }
    case Format::plain: {
      out << "a=" << mod.value << " R=" << mod.radical
          << " Q=" << mod.radical_totient << " phi=" << mod.totient
          << " period=" << fx.params.period << " c0=" << format_rational(fx.c0)
          << '\n';
      for (size_t nu = 0; nu < fx.coeffs.size(); ++nu)
        out << "nu=" << nu << " re=" << format_double17(fx.coeffs[nu].real())
            << " im=" << format_double17(fx.coeffs[nu].imag()) << '\n';
      for (size_t j = 0; j < fx.residues.entries.size(); ++j)
        out << "m=" << (static_cast<int64_t>(j) - fx.params.period + 1)
            << " r=" << format_rational(fx.residues.entries[j]) << '\n';
      break;
    }
  }
  return 0;
}

int cmd_series(const Options& o, std::ostream& out) {
  const FactoredModulus mod = factor(o.a);
  const SeriesExpansion series = expand_gf(mod, o.terms);
  switch (o.format) {
    case Format::csv:
      write_series_csv(out, series);
      break;
    case Format::plain:
      for (size_t i = 0; i < series.terms.size(); ++i)
        out << (i + 1) << ' ' << numerator(series.terms[i]) << '\n';
      break;
    case Format::json: {
      nlohmann::ordered_json j;
      j["a"] = o.a;
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (size_t i = 0; i < series.terms.size(); ++i)
        terms.push_back(
            {{"n", i + 1}, {"coefficient", numerator(series.terms[i]).str()}});
      j["terms"] = std::move(terms);
      out << j.dump() << '\n';
      break;
    }
  }
  return 0;
}

int cmd_shift(const Options& o, std::ostream& out) {
  const int64_t s = shift_between(factor(o.a), factor(o.b));
  switch (o.format) {
    case Format::plain:
      out << s << '\n';
      break;
    case Format::csv:
      out << "a,b,shift\n" << o.a << ',' << o.b << ',' << s << '\n';
      break;
    case Format::json: {
      nlohmann::ordered_json j;
      j["a"] = o.a;
      j["b"] = o.b;
      j["shift"] = s;
      out << j.dump() << '\n';
      break;
    }
  }
  return 0;
}

// Reconstruction of the base-window values (plus the next value step + 1)
// from a residue table or a floating expansion.
WindowCheck check_exact_reconstruction(const SequenceParams& params,
                                       const char* name) {
  const ResidueTable table = make_residue_table(params);
  const Rat c0(params.step, params.period);
  WindowCheck c{.name = name, .pass = true, .witness = {}, .detail = {}};
  for (int64_t n = -params.period + 1; n <= 1; ++n) {
    const Int expect =
        n <= 0 ? Int(params.base_value(n)) : Int(params.step) + 1;
    if (eval_exact(table, c0, n) != expect) {
      c.pass = false;
      c.witness = n;
      c.detail = "exact evaluation misses the base value at n = " +
                 std::to_string(n);
      break;
    }
  }
  return c;
}

WindowCheck check_float_reconstruction(const FactoredModulus& mod,
                                       PeriodChoice choice, double tol,
                                       const char* name) {
  const FourierExpansion fx = solve_coefficients(mod, choice);
  WindowCheck c{.name = name, .pass = true, .witness = {}, .detail = {}};
  for (int64_t n = -fx.params.period + 1; n <= 1; ++n) {
    const Int expect =
        n <= 0 ? Int(fx.params.base_value(n)) : Int(fx.params.step) + 1;
    const FourierEval ev = eval_fourier(fx, n);
    if (!(ev.residual() < tol) || ev.rounded != expect) {
      c.pass = false;
      c.witness = n;
      c.detail = "residual " + format_double17(ev.residual()) + " at n = " +
                 std::to_string(n);
      break;
    }
  }
  return c;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const FactoredModulus mod = factor(o.a);
  WindowReport report = verify_window(mod, o.from, o.to);
  std::vector<WindowCheck> checks = std::move(report.checks);

  checks.push_back(check_exact_reconstruction(
      make_params(mod, PeriodChoice::minimal),
      "exact reconstruction (minimal period)"));
  checks.push_back(
      check_exact_reconstruction(make_params(mod, PeriodChoice::full),
                                 "exact reconstruction (full period)"));
  if (mod.radical_totient <= 4096)
    checks.push_back(check_float_reconstruction(
        mod, PeriodChoice::minimal, o.tol,
        "fourier reconstruction (minimal period)"));
  if (mod.totient <= 4096)
    checks.push_back(
        check_float_reconstruction(mod, PeriodChoice::full, o.tol,
                                   "fourier reconstruction (full period)"));

  try {
    const SeriesReport sr = gf_vs_sequence(mod, o.terms);
    WindowCheck g{.name = "generating function agreement",
                  .pass = sr.pass,
                  .witness = sr.first_mismatch,
                  .detail = {}};
    if (!sr.pass)
      g.detail = "series gives " + sr.series_value.str() + ", sequence " +
                 sr.sequence_value.str();
    checks.push_back(std::move(g));

    const SeriesExpansion series = expand_gf(mod, o.terms);
    const std::optional<int64_t> bad = denominator_identity_failure(series, mod);
    checks.push_back(WindowCheck{
        .name = "denominator-clearing identity",
        .pass = !bad.has_value(),
        .witness = bad,
        .detail = bad ? "product differs at degree " + std::to_string(*bad)
                      : ""});
  } catch (const std::invalid_argument& e) {
    checks.push_back(WindowCheck{.name = "generating function agreement",
                                 .pass = true,
                                 .witness = {},
                                 .detail = std::string("skipped: ") + e.what()});
  }

  bool ok = true;
  for (const WindowCheck& c : checks) ok = ok && c.pass;

  switch (o.format) {
    case Format::plain:
      for (const WindowCheck& c : checks) {
        out << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
        if (c.witness) out << " (witness n = " << *c.witness << ")";
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << '\n';
      }
      out << (ok ? "all checks passed\n" : "some checks FAILED\n");
      break;
    case Format::csv:
      out << "check,pass,witness,detail\n";
      for (const WindowCheck& c : checks)
        out << '"' << c.name << "\"," << (c.pass ? "1" : "0") << ','
            << (c.witness ? std::to_string(*c.witness) : "") << ",\""
            << c.detail << "\"\n";
      break;
    case Format::json: {
      nlohmann::ordered_json j;
      j["a"] = o.a;
      j["from"] = o.from;
      j["to"] = o.to;
      j["pass"] = ok;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const WindowCheck& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (c.witness) cj["witness"] = *c.witness;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        arr.push_back(std::move(cj));
      }
      j["checks"] = std::move(arr);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "enumerate, expand and cross-verify the increasing sequence of all "
      "integers coprime to a modulus"};
  app.name("coseq");
  Options o;

  const std::map<std::string, Method> methods{
      {"closed", Method::closed},
      {"recurrence", Method::recurrence},
      {"fourier", Method::fourier},
      {"exact-fourier", Method::exact_fourier},
      {"gf", Method::gf}};
  const std::map<std::string, PeriodChoice> choices{
      {"Q", PeriodChoice::minimal}, {"phi", PeriodChoice::full}};
  const std::map<std::string, Format> formats{{"plain", Format::plain},
                                              {"csv", Format::csv},
                                              {"json", Format::json}};

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format (plain, csv, json)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_method = [&](CLI::App* cmd) {
    cmd->add_option("--method", o.method,
                    "evaluation path (closed, recurrence, fourier, "
                    "exact-fourier, gf)")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    cmd->add_option("--period-choice", o.choice,
                    "period of the internal machinery (Q or phi)")
        ->transform(CLI::CheckedTransformer(choices));
    cmd->add_option("--tol", o.tol, "floating residual tolerance");
  };

  CLI::App* eval = app.add_subcommand("eval", "print P(n) at one index");
  eval->add_option("--a", o.a, "modulus")->required();
  eval->add_option("--n", o.n, "index")->required();
  add_method(eval);
  add_format(eval);

  CLI::App* range = app.add_subcommand("range", "print n,P(n) over [from,to]");
  range->add_option("--a", o.a, "modulus")->required();
  range->add_option("--from", o.from, "first index")->required();
  range->add_option("--to", o.to, "last index")->required();
  add_method(range);
  add_format(range);

  CLI::App* coeffs =
      app.add_subcommand("coeffs", "emit the fourier coefficient schema");
  coeffs->add_option("--a", o.a, "modulus")->required();
  coeffs->add_option("--period-choice", o.choice, "period (Q or phi)")
      ->transform(CLI::CheckedTransformer(choices));
  add_format(coeffs);

  CLI::App* series =
      app.add_subcommand("series", "emit generating-function coefficients");
  series->add_option("--a", o.a, "modulus")->required();
  series->add_option("--terms", o.terms, "number of coefficients")->required();
  add_format(series);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the window, reconstruction and series checks");
  verify->add_option("--a", o.a, "modulus")->required();
  verify->add_option("--from", o.from, "window start")->required();
  verify->add_option("--to", o.to, "window end")->required();
  verify->add_option("--terms", o.terms,
                     "series length for the agreement check");
  verify->add_option("--tol", o.tol, "floating residual tolerance");
  add_format(verify);

  CLI::App* shift =
      app.add_subcommand("shift", "index shift between two moduli sharing a radical");
  shift->add_option("--a", o.a, "first modulus")->required();
  shift->add_option("--b", o.b, "second modulus")->required();
  add_format(shift);

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("coseq");
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (range->parsed()) return cmd_range(o, out);
    if (coeffs->parsed()) return cmd_coeffs(o, out);
    if (series->parsed()) return cmd_series(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (shift->parsed()) return cmd_shift(o, out);
  } catch (const verification_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace coseq::cli
