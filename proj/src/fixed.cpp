#include "bernzeta/fixed.hpp"

namespace bernzeta {

std::string format_truncated(const Integer& scaled, std::size_t scale, std::size_t digits) {
  Integer mag = ::abs(scaled);
  if (digits <= scale)
    mag /= pow10(scale - digits);
  else
    mag *= pow10(digits - scale);
  const Integer unit = pow10(digits);
  const Integer whole = mag / unit;
  std::string out = (scaled < 0 && mag != 0) ? "-" : "";
  out += whole.get_str();
  if (digits == 0) return out;
  const std::string frac = Integer(mag - whole * unit).get_str();
  return out + "." + std::string(digits - frac.size(), '0') + frac;
}

bool truncations_agree(const FixedInterval& x, std::size_t digits) {
  return format_truncated(x.lo, x.scale, digits) == format_truncated(x.hi, x.scale, digits);
}

namespace {

struct ArctanSum {
  Integer value;
  Integer error_ulps;
};

// atan(1/x) * one for x >= 2, by the alternating Taylor series with
// truncating divisions. Each term is off by < 3 ulps and the dropped tail
// by < 3 ulps.
ArctanSum arctan_inverse(unsigned long x, const Integer& one) {
  const Integer x2 = Integer(x) * x;
  Integer power = one / x;
  Integer sum = 0;
  unsigned long k = 0;
  for (; power != 0; ++k) {
    const Integer term = power / (2 * k + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    power /= x2;
  }
  return {sum, Integer(3 * k + 3)};
}

constexpr std::size_t pi_guard_digits = 20;

}  // namespace

FixedInterval pi_interval(std::size_t scale) {
  const Integer one = pow10(scale + pi_guard_digits);
  const ArctanSum a = arctan_inverse(5, one);
  const ArctanSum b = arctan_inverse(239, one);
  const Integer approx = 16 * a.value - 4 * b.value;
  const Integer err = 16 * a.error_ulps + 4 * b.error_ulps + 1;
  const Integer guard = pow10(pi_guard_digits);
  return {floor_div(approx - err, guard), ceil_div(approx + err, guard), scale};
}

std::string pi_digits(std::size_t digits) {
  if (digits < 1 || digits > max_decimal_digits)
    throw UsageError("pi digits must be in 1.." + std::to_string(max_decimal_digits));
  for (std::size_t scale = digits + 10;; scale += 10) {
    const FixedInterval pi = pi_interval(scale);
    if (truncations_agree(pi, digits)) return format_truncated(pi.lo, scale, digits);
  }
}

}  // namespace bernzeta
