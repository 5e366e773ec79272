#include "bernzeta/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "bernzeta/bernoulli.hpp"
#include "bernzeta/fixed.hpp"
#include "bernzeta/fourier.hpp"
#include "bernzeta/verify.hpp"
#include "bernzeta/zeta.hpp"

namespace bernzeta::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, latex };

Json rational_json(const Rational& r) { return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

Json coeffs_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rational_json(c));
  return arr;
}

Json parseval_json(const ParsevalReport& r) {
  return Json{{"k", r.k},
              {"terms", r.terms},
              {"lhs", r.lhs.num().get_str() + "/" + r.lhs.den().get_str()},
              {"partial", r.partial_text()},
              {"residual", r.residual_text()},
              {"tail_bound", r.tail_bound_text()},
              {"pass", r.pass}};
}

// Truncated decimal of a rational, used for `zeta <negative s> --digits`.
std::string rational_decimal(const Rational& r, std::size_t digits) {
  Integer scaled = r.num() * pow10(digits);
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), r.den().get_mpz_t());
  return format_truncated(scaled, digits, digits);
}

struct Options {
  std::string format = "text";
  unsigned long index = 0;  // j or p
  std::string eval_m;
  std::int64_t s = 0;
  std::optional<std::size_t> digits;
  unsigned k = 0;
  unsigned l = 0;
  std::int64_t n = 0;
  unsigned max_k = 5;
  std::uint64_t terms = 10000;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    fmt_ = o.format == "json" ? Format::json : o.format == "latex" ? Format::latex : Format::text;
  }

  int number() {
    const Rational b = bernoulli_number(o_.index);
    if (fmt_ == Format::json)
      emit(Json{{"j", o_.index}, {"value", rational_json(b)}});
    else
      line(fmt_ == Format::latex ? b.to_latex() : b.to_string());
    return exit_ok;
  }

  int poly() {
    const Polynomial p = bernoulli_polynomial(o_.index);
    if (fmt_ == Format::json)
      emit(Json{{"p", o_.index}, {"coeffs", coeffs_json(p)}, {"text", p.to_string()}});
    else
      line(fmt_ == Format::latex ? p.to_latex() : p.to_string());
    return exit_ok;
  }

  int powersum() {
    const Polynomial s = power_sum_polynomial(o_.index);
    std::optional<Rational> value;
    Integer m;
    if (!o_.eval_m.empty()) {
      if (m.set_str(o_.eval_m, 10) != 0 || m < 1) throw UsageError("--eval expects an integer m >= 1");
      value = s(m);
    }
    if (fmt_ == Format::json) {
      Json j{{"p", o_.index}, {"coeffs", coeffs_json(s)}, {"text", s.to_string()}};
      if (value) j["eval"] = Json{{"m", m.get_str()}, {"value", rational_json(*value)}};
      emit(j);
      return exit_ok;
    }
    const bool latex = fmt_ == Format::latex;
    line(latex ? s.to_latex() : s.to_string());
    if (value) line(latex ? value->to_latex() : value->to_string());
    return exit_ok;
  }

  int zeta() {
    const ZetaExact z = zeta_at(o_.s);
    std::optional<std::string> decimal;
    if (o_.digits) {
      if (const auto* even = std::get_if<ZetaValue>(&z))
        decimal = zeta_even_decimal(even->pi_power / 2, *o_.digits);
      else
        decimal = rational_decimal(std::get<Rational>(z), *o_.digits);
    }
    if (fmt_ == Format::json) {
      Json j{{"s", o_.s}};
      if (const auto* even = std::get_if<ZetaValue>(&z)) {
        j["coeff"] = rational_json(even->coeff);
        j["pi_power"] = even->pi_power;
        j["text"] = even->to_string();
      } else {
        j["value"] = rational_json(std::get<Rational>(z));
        j["text"] = std::get<Rational>(z).to_string();
      }
      if (decimal) j["decimal"] = *decimal;
      emit(j);
      return exit_ok;
    }
    const bool latex = fmt_ == Format::latex;
    line(std::visit([&](const auto& v) { return latex ? v.to_latex() : v.to_string(); }, z));
    if (decimal) line(*decimal);
    return exit_ok;
  }

  int fourier() {
    const FourierValue c = fourier_coeff_closed(o_.k, o_.n);
    if (const auto* zero = std::get_if<Rational>(&c)) {
      if (fmt_ == Format::json)
        emit(Json{{"k", o_.k}, {"n", o_.n}, {"value", rational_json(*zero)}});
      else
        line(fmt_ == Format::latex ? zero->to_latex() : zero->to_string());
      return exit_ok;
    }
    const auto& f = std::get<FourierExact>(c);
    const PiLaurent mod2 = fourier_modulus_squared(f);
    if (fmt_ == Format::json) {
      Json terms = Json::array();
      for (const auto& [m, q] : f.terms()) terms.push_back(Json{{"m", m}, {"q", rational_json(q)}});
      Json modulus = Json::array();
      for (const auto& [e, r] : mod2.terms()) modulus.push_back(Json{{"pi_power", e}, {"coeff", rational_json(r)}});
      emit(Json{{"k", o_.k},
                {"n", o_.n},
                {"terms", terms},
                {"modulus_squared", modulus},
                {"text", f.to_string()}});
    } else if (fmt_ == Format::latex) {
      line(f.to_latex());
      line(mod2.to_latex());
    } else {
      line(f.to_string());
      line("|c|^2 = " + mod2.to_string());
    }
    return exit_ok;
  }

  int innerproduct() {
    const Rational v = inner_product_closed(o_.k, o_.l);
    if (fmt_ == Format::json)
      emit(Json{{"k", o_.k}, {"l", o_.l}, {"value", rational_json(v)}});
    else
      line(fmt_ == Format::latex ? v.to_latex() : v.to_string());
    return exit_ok;
  }

  int pi() {
    const std::string digits = pi_digits(*o_.digits);
    if (fmt_ == Format::json)
      emit(Json{{"digits", *o_.digits}, {"value", digits}});
    else
      line(digits);
    return exit_ok;
  }

  int verify() {
    if (o_.max_k == 0 || o_.terms == 0) throw UsageError("--max-k and --terms must be positive");
    const VerifyReport report = verify_all(o_.max_k, o_.terms);
    if (fmt_ == Format::json) {
      Json checks = Json::array();
      for (const auto& c : report.checks) {
        Json j{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) j["detail"] = c.detail;
        checks.push_back(j);
      }
      Json parseval = Json::array();
      for (const auto& r : report.parseval) parseval.push_back(parseval_json(r));
      emit(Json{{"checks", checks}, {"parseval", parseval}, {"pass", report.pass()}});
    } else {
      std::size_t failed = 0;
      for (const auto& c : report.checks) {
        failed += c.pass ? 0 : 1;
        line((c.pass ? "PASS " : "FAIL ") + c.name + (c.pass ? "" : ": " + c.detail));
      }
      for (const auto& r : report.parseval)
        line("parseval k=" + std::to_string(r.k) + " N=" + std::to_string(r.terms) + " lhs=" + r.lhs.to_string() +
             " residual=" + r.residual_text() + " tail_bound=" + r.tail_bound_text() +
             (r.pass ? " pass" : " FAIL"));
      line(failed == 0 ? "verify: all " + std::to_string(report.checks.size()) + " checks passed"
                       : "verify: " + std::to_string(failed) + " of " + std::to_string(report.checks.size()) +
                             " checks failed");
    }
    return report.pass() ? exit_ok : exit_domain;
  }

 private:
  void line(const std::string& s) { out_ << s << '\n'; }
  void emit(const Json& j) { line(j.dump()); }

  const Options& o_;
  std::ostream& out_;
  Format fmt_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Bernoulli numbers, power sums, Fourier coefficients and zeta values", "bernzeta"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();

  auto* number = app.add_subcommand("number", "Bernoulli number B_j");
  number->add_option("j", o.index, "Index j >= 0")->required();

  auto* poly = app.add_subcommand("poly", "Bernoulli polynomial B_p(t)");
  poly->add_option("p", o.index, "Degree p >= 0")->required();

  auto* powersum = app.add_subcommand("powersum", "Power-sum polynomial S_p(t) = sum_{n=1}^{t-1} n^p");
  powersum->add_option("p", o.index, "Power p >= 0")->required();
  powersum->add_option("--eval", o.eval_m, "Evaluate S_p(m) at an integer m >= 1");

  auto* zeta = app.add_subcommand("zeta", "Exact zeta(s) for even s >= 2 and negative s");
  zeta->add_option("s", o.s, "Integer argument s")->required();
  zeta->add_option("--digits", o.digits, "Also print a decimal truncated to D digits");

  auto* fourier = app.add_subcommand("fourier", "Fourier coefficient c_n(B_k)");
  fourier->add_option("k", o.k, "Bernoulli index k >= 1")->required();
  fourier->add_option("n", o.n, "Frequency n")->required();

  auto* inner = app.add_subcommand("innerproduct", "Integral of B_k(t) B_l(t) over [0, 1]");
  inner->add_option("k", o.k, "k >= 1")->required();
  inner->add_option("l", o.l, "l >= 1")->required();

  auto* pi = app.add_subcommand("pi", "Digits of pi (truncated)");
  pi->add_option("--digits", o.digits, "Number of digits after the point, 1..10000")->required();

  auto* verify = app.add_subcommand("verify", "Run every cross-oracle check");
  verify->add_option("--max-k", o.max_k, "Largest k for Parseval reports")->capture_default_str();
  verify->add_option("--terms", o.terms, "Frequencies N per side in Parseval sums")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return exit_usage;
  }

  Runner runner(o, out);
  try {
    if (number->parsed()) return runner.number();
    if (poly->parsed()) return runner.poly();
    if (powersum->parsed()) return runner.powersum();
    if (zeta->parsed()) return runner.zeta();
    if (fourier->parsed()) return runner.fourier();
    if (inner->parsed()) return runner.innerproduct();
    if (pi->parsed()) return runner.pi();
    if (verify->parsed()) return runner.verify();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_domain;
  }
  return exit_usage;
}

}  // namespace bernzeta::cli
