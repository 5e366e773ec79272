#include "bernzeta/zeta.hpp"

#include <cmath>
#include <map>

#include "bernzeta/bernoulli.hpp"
#include "bernzeta/fourier.hpp"

namespace bernzeta {

namespace {

std::string pi_power_text(unsigned e, bool latex) {
  const std::string d = std::to_string(e);
  if (latex) return "\\pi^" + (d.size() > 1 ? "{" + d + "}" : d);
  return "pi^" + d;
}

}  // namespace

std::string ZetaValue::to_string() const {
  if (coeff.is_zero()) return "0";
  std::string out = coeff.sign() < 0 ? "-" : "";
  const Integer num = ::abs(coeff.num());
  if (num != 1) out += num.get_str() + "*";
  out += pi_power_text(pi_power, false);
  if (coeff.den() != 1) out += "/" + coeff.den().get_str();
  return out;
}

std::string ZetaValue::to_latex() const {
  if (coeff.is_zero()) return "0";
  std::string out = coeff.sign() < 0 ? "-" : "";
  const Integer num = ::abs(coeff.num());
  const std::string top = (num != 1 ? num.get_str() : "") + pi_power_text(pi_power, true);
  if (coeff.den() == 1) return out + top;
  return out + "\\frac{" + top + "}{" + coeff.den().get_str() + "}";
}

Rational inner_product_closed(unsigned k, unsigned l) {
  if (k == 0 || l == 0) throw DomainError("closed-form inner product needs 1 <= k <= l");
  if (k > l) std::swap(k, l);
  const Rational sign = (k % 2 == 1) ? 1 : -1;
  return sign * Rational(factorial(l) * factorial(k), factorial(l + k)) * bernoulli_number(l + k);
}

Rational inner_product_exact(unsigned k, unsigned l) {
  return (bernoulli_polynomial(k) * bernoulli_polynomial(l)).integral(0, 1);
}

ZetaValue zeta_even(unsigned k) {
  if (k == 0) throw DomainError("zeta_even needs k >= 1");
  const Rational sign = (k % 2 == 1) ? 1 : -1;
  const Integer two_pow = pow_ui(Integer(2), 2 * k - 1);
  return {sign * Rational(two_pow, factorial(2 * k)) * bernoulli_number(2 * k), 2 * k};
}

Rational zeta_negative(unsigned m) {
  if (m == 0) throw DomainError("zeta(0) is outside the supported domain");
  if (m % 2 == 0) return 0;  // trivial zero
  return -bernoulli_number(m + 1) / Rational(m + 1);
}

ZetaExact zeta_at(std::int64_t s) {
  if (s == 1) throw DomainError("zeta has a simple pole at s = 1");
  if (s == 0) throw DomainError("zeta(0) is outside the supported domain: no closed form is provided for s = 0");
  if (s < 0) return zeta_negative(static_cast<unsigned>(-s));
  if (s % 2 == 1)
    throw DomainError("no exact closed form is known for zeta(s) at odd s >= 3 (s = " + std::to_string(s) + ")");
  return zeta_even(static_cast<unsigned>(s / 2));
}

FixedInterval zeta_even_interval(unsigned k, std::size_t scale) {
  const ZetaValue z = zeta_even(k);
  const FixedInterval pi = pi_interval(scale);
  const Integer den = z.coeff.den() * pow10(scale * (z.pi_power - 1));
  return {floor_div(z.coeff.num() * pow_ui(pi.lo, z.pi_power), den),
          ceil_div(z.coeff.num() * pow_ui(pi.hi, z.pi_power), den), scale};
}

std::string zeta_even_decimal(unsigned k, std::size_t digits) {
  if (digits > max_decimal_digits)
    throw UsageError("decimal digits must be in 0.." + std::to_string(max_decimal_digits));
  for (std::size_t scale = digits + 10;; scale += 10) {
    const FixedInterval z = zeta_even_interval(k, scale);
    if (truncations_agree(z, digits)) return format_truncated(z.lo, scale, digits);
  }
}

ZetaValue zeta_even_via_parseval(const Polynomial& f) {
  const auto c1 = fourier_coeff_ibp(f, 1);
  const auto& fe = std::get<FourierExact>(c1);
  if (fe.terms().size() != 1)
    throw DomainError("Parseval route needs Fourier coefficients with a single (2*pi*i*n)^-m term");
  const auto& [m, q] = *fe.terms().begin();
  const Rational c0 = std::get<Rational>(fourier_coeff_ibp(f, 0));
  const Rational norm2 = (f * f).integral(0, 1);
  // norm2 - c0^2 = 2 q^2 / 2^{2m} * pi^{-2m} * zeta(2m)
  const Rational coeff = (norm2 - c0 * c0) * Rational(pow_ui(Integer(2), 2 * m)) / (Rational(2) * q * q);
  return {coeff, 2 * m};
}

std::string ParsevalReport::partial_text() const {
  return format_truncated(partial.lo, partial.scale, display_digits);
}

std::string ParsevalReport::residual_text() const {
  return format_truncated(residual.lo, residual.scale, display_digits);
}

std::string ParsevalReport::tail_bound_text() const {
  return format_truncated(tail_bound.lo, tail_bound.scale, display_digits);
}

namespace {

// Leading zeros after the decimal point in the tail bound, so that `digits`
// significant digits of the residual survive.
std::size_t tail_magnitude(unsigned k, std::uint64_t terms) {
  const double ln10 = std::log(10.0);
  const double log10_c = std::log10(2.0) + 2.0 * std::lgamma(k + 1.0) / ln10 - 2.0 * k * std::log10(2.0 * M_PI);
  const double log10_tail =
      log10_c - (2.0 * k - 1.0) * std::log10(static_cast<double>(terms)) - std::log10(2.0 * k - 1.0);
  return log10_tail >= 0 ? 0 : static_cast<std::size_t>(std::ceil(-log10_tail));
}

}  // namespace

ParsevalReport parseval_verify(unsigned k, std::uint64_t terms, std::size_t digits, kernels::Schedule schedule) {
  if (k == 0) throw DomainError("Parseval check needs k >= 1");
  if (terms == 0) throw UsageError("Parseval check needs at least one term");

  ParsevalReport r;
  r.k = k;
  r.terms = terms;
  r.lhs = inner_product_closed(k, k);
  r.display_digits = digits + tail_magnitude(k, terms);
  const std::size_t scale = r.display_digits + 10 + std::to_string(terms).size();

  const Integer unit = pow10(scale);
  const FixedInterval pi = pi_interval(scale);
  const unsigned two_k = 2 * k;

  // sum_{n<=N} n^{-2k} in [sum_lo, sum_lo + N] / 10^scale
  const Integer sum_lo = kernels::reciprocal_power_sum(two_k, terms, unit, schedule);
  const Integer sum_hi = sum_lo + Integer(std::to_string(terms));

  // 2 (k!)^2 / (2 pi)^{2k} with pi scaled: F * 10^{2k scale} / (2 pi_scaled)^{2k}
  const Integer f = 2 * factorial(k) * factorial(k);
  const Integer unit_pow = pow_ui(unit, two_k);
  const Integer den_small = pow_ui(2 * pi.lo, two_k);  // larger constant
  const Integer den_big = pow_ui(2 * pi.hi, two_k);    // smaller constant

  r.partial = {floor_div(f * unit_pow * sum_lo, den_big), ceil_div(f * unit_pow * sum_hi, den_small), scale};

  const Integer lhs_lo = floor_div(r.lhs.num() * unit, r.lhs.den());
  const Integer lhs_hi = ceil_div(r.lhs.num() * unit, r.lhs.den());
  r.residual = {lhs_lo - r.partial.hi, lhs_hi - r.partial.lo, scale};

  const Integer n_pow = pow_ui(Integer(std::to_string(terms)), two_k - 1) * (two_k - 1);
  r.tail_bound = {floor_div(f * unit_pow * unit, den_big * n_pow), ceil_div(f * unit_pow * unit, den_small * n_pow),
                  scale};

  r.pass = r.residual.hi <= r.tail_bound.lo;
  return r;
}

}  // namespace bernzeta
