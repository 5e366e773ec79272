#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include "bernzeta/integer.hpp"

namespace bernzeta {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v)  // NOLINT(google-explicit-constructor)
  {
    if constexpr (std::is_signed_v<T>)
      value_ = static_cast<long>(v);
    else
      value_ = static_cast<unsigned long>(v);
  }

  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// Throws DomainError when den == 0.
  Rational(const Integer& num, const Integer& den);

  /// Parses "num" or "num/den".
  static Rational parse(std::string_view text);

  const Integer& num() const { return value_.get_num(); }
  const Integer& den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// "num/den", den omitted when 1.
  std::string to_string() const;
  /// "\frac{num}{den}" with a leading '-' for negatives.
  std::string to_latex() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned long e);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bernzeta
