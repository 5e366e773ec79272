#include "bernzeta/bernoulli.hpp"

#include <utility>

namespace bernzeta {

BernoulliCache::BernoulliCache() : values_{Rational(1)} {}

void BernoulliCache::fill_through(std::size_t j) {
  values_.reserve(j + 1);
  for (std::size_t n = values_.size(); n <= j; ++n) {
    Rational acc;
    for (std::size_t l = 0; l < n; ++l) {
      if (values_[l].is_zero()) continue;
      acc += Rational(binomial(n + 1, l)) * values_[l];
    }
    values_.push_back(-acc / Rational(n + 1));
  }
}

Rational BernoulliCache::get(std::size_t j) {
  std::lock_guard lock(mutex_);
  if (j >= values_.size()) fill_through(j);
  return values_[j];
}

std::vector<Rational> BernoulliCache::prefix(std::size_t count) {
  std::lock_guard lock(mutex_);
  if (count > values_.size()) fill_through(count - 1);
  return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(count)};
}

BernoulliCache& default_bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

Rational bernoulli_number(std::size_t j) { return default_bernoulli_cache().get(j); }

namespace {

// (e^x - 1)/x = sum_j x^j / (j+1)!
Series<Rational> exp_minus_one_over_x(std::size_t order) {
  Series<Rational> s(order);
  for (std::size_t j = 0; j < order; ++j) s[j] = Rational(1, factorial(j + 1));
  return s;
}

}  // namespace

std::vector<Rational> bernoulli_numbers_via_gf(std::size_t order) {
  if (order == 0) throw UsageError("generating-function order must be positive");
  const Series<Rational> g = reciprocal(exp_minus_one_over_x(order));
  std::vector<Rational> out(order);
  for (std::size_t j = 0; j < order; ++j) out[j] = g[j] * Rational(factorial(j));
  return out;
}

Polynomial bernoulli_polynomial(std::size_t p) {
  const auto b = default_bernoulli_cache().prefix(p + 1);
  std::vector<Rational> cs(p + 1);
  for (std::size_t k = 0; k <= p; ++k) cs[p - k] = Rational(binomial(p, k)) * b[k];
  return Polynomial(std::move(cs));
}

Polynomial power_sum_polynomial(std::size_t p) {
  if (p == 0) return Polynomial({Rational(-1), Rational(1)});
  const auto b = default_bernoulli_cache().prefix(p + 1);
  std::vector<Rational> cs(p + 2);
  for (std::size_t j = 0; j <= p; ++j) cs[p + 1 - j] = Rational(binomial(p + 1, j)) * b[j] / Rational(p + 1);
  return Polynomial(std::move(cs));
}

Polynomial power_sum_recursive(std::size_t p) {
  std::vector<Polynomial> s;
  s.reserve(p + 1);
  s.push_back(Polynomial({Rational(-1), Rational(1)}));
  const Polynomial one = Polynomial::constant(1);
  for (std::size_t q = 1; q <= p; ++q) {
    Polynomial acc = Polynomial::monomial(q + 1) - one;
    for (std::size_t k = 0; k < q; ++k) acc -= s[k] * Rational(binomial(q + 1, k));
    s.push_back(acc / Rational(q + 1));
  }
  return s[p];
}

Rational power_sum_bruteforce(std::size_t p, const Integer& m) {
  if (m < 1) throw UsageError("power sum upper limit m must be >= 1");
  Integer acc = 0;
  for (Integer n = 1; n < m; ++n) acc += pow_ui(n, p);
  return Rational(acc);
}

Series<Polynomial> bernoulli_poly_gf(std::size_t order) {
  if (order == 0) throw UsageError("generating-function order must be positive");
  Series<Polynomial> etx(order);
  for (std::size_t p = 0; p < order; ++p) etx[p] = Polynomial::monomial(p, Rational(1, factorial(p)));
  return etx * lift(reciprocal(exp_minus_one_over_x(order)));
}

}  // namespace bernzeta
