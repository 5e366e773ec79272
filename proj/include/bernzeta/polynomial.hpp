#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "bernzeta/rational.hpp"

namespace bernzeta {

/// Dense univariate polynomial with rational coefficients; coeffs()[i] is
/// the coefficient of t^i. The stored list never ends in a zero, so the zero
/// polynomial is the empty list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t power, const Rational& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i, zero past the degree.
  Rational coeff(std::size_t i) const;
  Rational leading() const;

  /// Horner evaluation.
  Rational operator()(const Rational& t) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  /// Exact integral over [a, b].
  Rational integral(const Rational& a, const Rational& b) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Rational& c) { return a *= c.reciprocal(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Descending powers, e.g. "t^3 - 3/2*t^2 + 1/2*t".
  std::string to_string(char var = 't') const;
  std::string to_latex(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace bernzeta
