#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "bernzeta/polynomial.hpp"
#include "bernzeta/rational.hpp"

namespace bernzeta {

/// Exact value sum_m q_m (2 pi i n)^{-m} for a fixed nonzero frequency n.
/// Zero coefficients are never stored, so structural equality is numeric
/// equality.
class FourierExact {
 public:
  /// Throws DomainError when n == 0.
  FourierExact(std::int64_t n, std::map<unsigned, Rational> terms);

  std::int64_t frequency() const { return n_; }
  const std::map<unsigned, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Floating-point value for display; never used for verification.
  std::complex<long double> approximate() const;

  /// Terms in increasing m, e.g. "-1/(2*pi*i*3)^1 - 2/(2*pi*i*3)^2".
  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const FourierExact&, const FourierExact&) = default;

 private:
  std::int64_t n_;
  std::map<unsigned, Rational> terms_;
};

/// Either a FourierExact (n != 0) or the rational c_0.
using FourierValue = std::variant<FourierExact, Rational>;

/// Finite sum sum_e r_e pi^e with nonzero r_e.
class PiLaurent {
 public:
  PiLaurent() = default;
  explicit PiLaurent(std::map<int, Rational> terms);

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PiLaurent& operator+=(const PiLaurent& o);
  friend PiLaurent operator+(PiLaurent a, const PiLaurent& b) { return a += b; }
  friend PiLaurent operator*(const Rational& c, const PiLaurent& p);

  /// Terms in increasing exponent, e.g. "1/4*pi^-2".
  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const PiLaurent&, const PiLaurent&) = default;

 private:
  std::map<int, Rational> terms_;
};

/// c_n(B_k) = -k!/(2 pi i n)^k for n != 0 and 0 for n == 0. Throws
/// DomainError for k == 0.
FourierValue fourier_coeff_closed(unsigned k, std::int64_t n);

/// c_n(p) for an arbitrary polynomial by repeated integration by parts:
///   c_n(p) = -sum_j (p^{(j)}(1) - p^{(j)}(0)) (2 pi i n)^{-(j+1)},  n != 0,
/// and the exact integral of p over [0, 1] for n == 0.
FourierValue fourier_coeff_ibp(const Polynomial& p, std::int64_t n);

/// |F|^2 as an exact Laurent polynomial in pi.
PiLaurent fourier_modulus_squared(const FourierExact& f);

/// Text of either alternative of a FourierValue.
std::string to_string(const FourierValue& v);

}  // namespace bernzeta
