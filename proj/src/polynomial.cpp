#include "bernzeta/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace bernzeta {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t power, const Rational& c) {
  std::vector<Rational> cs(power + 1);
  cs[power] = c;
  return Polynomial(std::move(cs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational{} : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / Rational(i + 1);
  return Polynomial(std::move(out));
}

Rational Polynomial::integral(const Rational& a, const Rational& b) const {
  const Polynomial anti = antiderivative();
  return anti(b) - anti(a);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

namespace {

std::string power_text(char var, std::size_t e, bool latex) {
  std::string s(1, var);
  if (e == 1) return s;
  const std::string digits = std::to_string(e);
  if (latex && digits.size() > 1) return s + "^{" + digits + "}";
  return s + "^" + digits;
}

std::string render(const std::vector<Rational>& coeffs, char var, bool latex) {
  if (coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t idx = coeffs.size(); idx-- > 0;) {
    const Rational& c = coeffs[idx];
    if (c.is_zero()) continue;
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    first = false;
    const Rational mag = c.abs();
    if (idx == 0) {
      out += latex ? mag.to_latex() : mag.to_string();
    } else if (mag == 1) {
      out += power_text(var, idx, latex);
    } else if (latex) {
      out += mag.to_latex() + power_text(var, idx, latex);
    } else {
      out += mag.to_string() + "*" + power_text(var, idx, latex);
    }
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string(char var) const { return render(coeffs_, var, false); }

std::string Polynomial::to_latex(char var) const { return render(coeffs_, var, true); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace bernzeta
