#include "bernzeta/rational.hpp"

#include <utility>

namespace bernzeta {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    return Rational(Integer(std::string(text.substr(0, slash))), Integer(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: '" + std::string(text) + "'");
  }
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(den(), num());
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::to_latex() const {
  if (is_integer()) return num().get_str();
  std::string out = sign() < 0 ? "-" : "";
  Integer n = ::abs(num());
  return out + "\\frac{" + n.get_str() + "}{" + den().get_str() + "}";
}

Rational pow(const Rational& base, unsigned long e) {
  return Rational(pow_ui(base.num(), e), pow_ui(base.den(), e));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace bernzeta
