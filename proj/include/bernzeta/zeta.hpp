#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

#include "bernzeta/fixed.hpp"
#include "bernzeta/kernels.hpp"
#include "bernzeta/polynomial.hpp"
#include "bernzeta/rational.hpp"

namespace bernzeta {

/// coeff * pi^pi_power.
struct ZetaValue {
  Rational coeff;
  unsigned pi_power = 0;

  /// "pi^2/6", "691*pi^12/638512875".
  std::string to_string() const;
  /// "\frac{\pi^2}{6}".
  std::string to_latex() const;

  friend bool operator==(const ZetaValue&, const ZetaValue&) = default;
};

/// int_0^1 B_k B_l = (-1)^{k-1} l! k! B_{l+k} / (l+k)!. Arguments are
/// swapped when k > l. Throws DomainError when k or l is zero.
Rational inner_product_closed(unsigned k, unsigned l);

/// int_0^1 B_k B_l by multiplying and integrating the polynomials.
Rational inner_product_exact(unsigned k, unsigned l);

/// zeta(2k) = (-1)^{k-1} 2^{2k-1} B_{2k} / (2k)! * pi^{2k}, k >= 1.
ZetaValue zeta_even(unsigned k);

/// zeta(-m) for m >= 1: -B_{m+1}/(m+1) for odd m, 0 for even m.
Rational zeta_negative(unsigned m);

using ZetaExact = std::variant<ZetaValue, Rational>;

/// Exact zeta(s) at integers where a closed form is available: even s >= 2
/// and s <= -1. Throws DomainError for s = 1 (pole), s = 0 and odd s >= 3.
ZetaExact zeta_at(std::int64_t s);

/// Certified enclosure of zeta(2k) * 10^scale.
FixedInterval zeta_even_interval(unsigned k, std::size_t scale);

/// zeta(2k) truncated to `digits` fractional digits (0 gives the integer
/// part). Throws UsageError for digits > max_decimal_digits.
std::string zeta_even_decimal(unsigned k, std::size_t digits);

/// Parseval's identity solved for zeta(2m), for a polynomial f whose
/// Fourier coefficients are a single term q (2 pi i n)^{-m}:
///   int f^2 - c_0^2 = 2 q^2 (2 pi)^{-2m} zeta(2m).
/// Throws DomainError when c_n(f) is not a single term.
ZetaValue zeta_even_via_parseval(const Polynomial& f);

/// Truncated Parseval check for B_k with N = `terms` frequencies each side.
/// All decimals are certified enclosures at `scale` digits.
struct ParsevalReport {
  unsigned k = 0;
  std::uint64_t terms = 0;
  Rational lhs;              // int_0^1 B_k^2, exact
  FixedInterval partial;     // sum_{0<|n|<=N} |c_n(B_k)|^2
  FixedInterval residual;    // lhs - partial
  FixedInterval tail_bound;  // 2 (k!)^2 (2 pi)^{-2k} N^{1-2k} / (2k-1)
  std::size_t display_digits = 0;
  bool pass = false;         // residual <= tail_bound, certified

  std::string partial_text() const;
  std::string residual_text() const;
  std::string tail_bound_text() const;
};

/// `digits` is the number of significant digits resolved in the residual;
/// working precision is at least `digits` plus guard digits. Throws
/// DomainError for k == 0 and UsageError for terms == 0.
ParsevalReport parseval_verify(unsigned k, std::uint64_t terms, std::size_t digits = 30,
                               kernels::Schedule schedule = kernels::Schedule::parallel);

}  // namespace bernzeta
