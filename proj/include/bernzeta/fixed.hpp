#pragma once

#include <cstddef>
#include <string>

#include "bernzeta/integer.hpp"
#include "bernzeta/rational.hpp"

namespace bernzeta {

/// Enclosure lo/10^scale <= x <= hi/10^scale of a real number.
struct FixedInterval {
  Integer lo;
  Integer hi;
  std::size_t scale = 0;

  Rational lower() const { return Rational(lo, pow10(scale)); }
  Rational upper() const { return Rational(hi, pow10(scale)); }
};

/// Decimal text of `scaled / 10^scale` truncated toward zero to `digits`
/// fractional digits. digits == 0 yields the integer part without a '.'.
std::string format_truncated(const Integer& scaled, std::size_t scale, std::size_t digits);

/// Both endpoints truncate to the same `digits`-digit decimal.
bool truncations_agree(const FixedInterval& x, std::size_t digits);

/// Largest accepted digit count for pi and zeta decimals.
inline constexpr std::size_t max_decimal_digits = 10000;

/// Certified enclosure of pi * 10^scale from Machin's formula
/// pi = 16 atan(1/5) - 4 atan(1/239) in integer arithmetic.
FixedInterval pi_interval(std::size_t scale);

/// pi truncated to `digits` places, e.g. pi_digits(5) == "3.14159".
/// Throws UsageError outside 1..max_decimal_digits.
std::string pi_digits(std::size_t digits);

}  // namespace bernzeta
