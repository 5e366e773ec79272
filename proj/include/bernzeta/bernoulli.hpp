#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "bernzeta/polynomial.hpp"
#include "bernzeta/rational.hpp"
#include "bernzeta/series.hpp"

namespace bernzeta {

/// Memo of B_0, B_1, ... built by the recursion
///   B_j = -1/(j+1) * sum_{l<j} C(j+1, l) B_l,  B_0 = 1.
/// Safe to share between threads; fills are serialized.
class BernoulliCache {
 public:
  BernoulliCache();

  Rational get(std::size_t j);
  /// [B_0, ..., B_{count-1}]
  std::vector<Rational> prefix(std::size_t count);

 private:
  void fill_through(std::size_t j);

  std::mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliCache& default_bernoulli_cache();

/// B_j with the B_1 = -1/2 convention.
Rational bernoulli_number(std::size_t j);

/// [B_0, ..., B_{order-1}] read off j! * [x^j] of 1 / (sum_j x^j/(j+1)!),
/// i.e. x/(e^x - 1). Independent of the recursion. Throws UsageError for
/// order 0.
std::vector<Rational> bernoulli_numbers_via_gf(std::size_t order);

/// B_p(t) = sum_k C(p, k) B_k t^{p-k}; monic of degree p.
Polynomial bernoulli_polynomial(std::size_t p);

/// S_p(t) with S_p(m) = sum_{n=1}^{m-1} n^p, from the Bernoulli-number
/// closed form (p >= 1) and S_0(t) = t - 1.
Polynomial power_sum_polynomial(std::size_t p);

/// S_p(t) from the power-sum recursion
///   S_p = (t^{p+1} - 1 - sum_{k<p} C(p+1, k) S_k) / (p+1),  S_0 = t - 1.
/// Does not touch Bernoulli numbers.
Polynomial power_sum_recursive(std::size_t p);

/// Literal sum_{n=1}^{m-1} n^p. Throws UsageError when m < 1.
Rational power_sum_bruteforce(std::size_t p, const Integer& m);

/// Truncated x e^{tx} / (e^x - 1); [x^p] equals B_p(t) / p!.
Series<Polynomial> bernoulli_poly_gf(std::size_t order);

}  // namespace bernzeta
