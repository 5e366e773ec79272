#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "bernzeta/polynomial.hpp"
#include "bernzeta/rational.hpp"

namespace bernzeta {

/// Truncated formal power series sum_{i < order} c_i x^i over a coefficient
/// ring (Rational or Polynomial). Ring{} must be the additive identity.
///
/// Binary operations on series of different orders truncate to the smaller
/// order.
template <class Ring>
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t order) : coeffs_(order) {}
  explicit Series(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {}
  /// Pads with zeros or truncates to `order`.
  Series(std::vector<Ring> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) { coeffs_.resize(order); }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Ring>& coeffs() const { return coeffs_; }
  const Ring& operator[](std::size_t i) const { return coeffs_[i]; }
  Ring& operator[](std::size_t i) { return coeffs_[i]; }

  Series truncated(std::size_t order) const {
    return Series(std::vector<Ring>(coeffs_.begin(), coeffs_.begin() + std::min(order, coeffs_.size())));
  }

  friend Series operator+(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
    return out;
  }

  friend Series operator-(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
    return out;
  }

  /// Cauchy product.
  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    return out;
  }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Ring> coeffs_;
};

/// Multiplicative inverse up to the truncation order. Throws DomainError
/// when the constant term is zero (or the series is empty).
inline Series<Rational> reciprocal(const Series<Rational>& a) {
  const std::size_t n = a.order();
  if (n == 0 || a[0].is_zero()) throw DomainError("series reciprocal needs a nonzero constant term");
  const Rational inv0 = a[0].reciprocal();
  Series<Rational> b(n);
  b[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -acc * inv0;
  }
  return b;
}

/// Embeds a rational series as a series of constant polynomials.
inline Series<Polynomial> lift(const Series<Rational>& a) {
  Series<Polynomial> out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) out[i] = Polynomial::constant(a[i]);
  return out;
}

/// sum x^j / j!
inline Series<Rational> exp_series(std::size_t order) {
  Series<Rational> s(order);
  for (std::size_t j = 0; j < order; ++j) s[j] = Rational(1, factorial(j));
  return s;
}

}  // namespace bernzeta
