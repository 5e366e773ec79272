#include <doctest.h>

#include <thread>
#include <vector>

#include "bernzeta/bernoulli.hpp"
#include "oracles.hpp"

using namespace bernzeta;

namespace {

Polynomial poly(std::initializer_list<Rational> ascending) { return Polynomial(std::vector<Rational>(ascending)); }

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(6) == Rational(1, 42));
  CHECK(bernoulli_number(8) == Rational(-1, 30));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli numbers beyond 64-bit range") {
  // B_40 = -261082718496449122051/13530
  CHECK(bernoulli_number(40) == Rational(Integer("-261082718496449122051"), Integer(13530)));
}

TEST_CASE("bernoulli numbers via generating function") {
  const auto three = bernoulli_numbers_via_gf(3);
  CHECK(three == std::vector<Rational>{1, Rational(-1, 2), Rational(1, 6)});
  CHECK(bernoulli_numbers_via_gf(1) == std::vector<Rational>{1});
  CHECK_THROWS_AS(bernoulli_numbers_via_gf(0), UsageError);

  const auto gf = bernoulli_numbers_via_gf(61);
  for (std::size_t j = 0; j <= 60; ++j) CHECK(bernoulli_number(j) == gf[j]);
}

TEST_CASE("bernoulli numbers agree with Akiyama-Tanigawa") {
  const auto at = oracle::akiyama_tanigawa(61);
  for (std::size_t j = 0; j <= 60; ++j) CHECK(bernoulli_number(j).raw() == at[j]);
}

TEST_CASE("odd bernoulli numbers vanish") {
  for (std::size_t k = 1; k <= 30; ++k) CHECK(bernoulli_number(2 * k + 1).is_zero());
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_polynomial(0) == Polynomial::constant(1));
  CHECK(bernoulli_polynomial(1) == poly({Rational(-1, 2), 1}));
  CHECK(bernoulli_polynomial(2) == poly({Rational(1, 6), -1, 1}));
  CHECK(bernoulli_polynomial(3) == poly({0, Rational(1, 2), Rational(-3, 2), 1}));
  for (std::size_t p = 0; p <= 30; ++p) {
    const Polynomial b = bernoulli_polynomial(p);
    CHECK(b.degree() == static_cast<int>(p));
    CHECK(b.leading() == 1);
  }
}

TEST_CASE("bernoulli polynomial identities") {
  for (std::size_t p = 2; p <= 30; ++p) {
    const Polynomial b = bernoulli_polynomial(p);
    CHECK(b(0) == bernoulli_number(p));
    CHECK(b(1) == bernoulli_number(p));
  }
  for (std::size_t p = 1; p <= 30; ++p)
    CHECK(bernoulli_polynomial(p).derivative() == bernoulli_polynomial(p - 1) * Rational(p));
  for (std::size_t k = 1; k <= 20; ++k) CHECK(bernoulli_polynomial(k).integral(0, 1) == 0);
}

TEST_CASE("power sum polynomials") {
  CHECK(power_sum_polynomial(0) == poly({-1, 1}));
  CHECK(power_sum_polynomial(1) == poly({0, Rational(-1, 2), Rational(1, 2)}));
  CHECK(power_sum_polynomial(2) == poly({0, Rational(1, 6), Rational(-1, 2), Rational(1, 3)}));
  CHECK(power_sum_recursive(1) == poly({0, Rational(-1, 2), Rational(1, 2)}));
  CHECK(power_sum_recursive(2) == poly({0, Rational(1, 6), Rational(-1, 2), Rational(1, 3)}));
  for (std::size_t p = 0; p <= 20; ++p) {
    CHECK(power_sum_polynomial(p) == power_sum_recursive(p));
    CHECK(power_sum_polynomial(p).degree() == static_cast<int>(p + 1));
    CHECK(power_sum_polynomial(p).derivative() == bernoulli_polynomial(p));
  }
}

TEST_CASE("power sum brute force") {
  CHECK(power_sum_bruteforce(2, 4) == 14);
  CHECK(power_sum_bruteforce(5, 1) == 0);
  CHECK(power_sum_bruteforce(1, 101) == 5050);
  CHECK_THROWS_AS(power_sum_bruteforce(1, 0), UsageError);
  for (std::size_t p = 0; p <= 12; ++p)
    for (long m : {1, 2, 10, 100, 1000}) CHECK(power_sum_polynomial(p)(m) == power_sum_bruteforce(p, m));
}

TEST_CASE("power sums in terms of bernoulli polynomials") {
  for (std::size_t p = 1; p <= 20; ++p) {
    const Polynomial shifted = bernoulli_polynomial(p + 1) - Polynomial::constant(bernoulli_number(p + 1));
    CHECK(power_sum_polynomial(p) == shifted / Rational(p + 1));
    CHECK(power_sum_polynomial(p)(1) == 0);
  }
}

TEST_CASE("bernoulli polynomial generating function") {
  CHECK(bernoulli_poly_gf(2)[1] == poly({Rational(-1, 2), 1}));
  CHECK(bernoulli_poly_gf(1)[0] == Polynomial::constant(1));
  const auto g = bernoulli_poly_gf(8);
  for (std::size_t p = 0; p < 8; ++p) CHECK(g[p] == bernoulli_polynomial(p) / Rational(factorial(p)));
}

TEST_CASE("shared cache fills are identical across threads") {
  std::vector<std::vector<Rational>> results(8);
  {
    BernoulliCache cache;
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < results.size(); ++i)
      pool.emplace_back([&, i] { results[i] = cache.prefix(40 + 3 * i); });
    for (auto& t : pool) t.join();
  }
  for (const auto& r : results)
    for (std::size_t j = 0; j < r.size(); ++j) CHECK(r[j] == bernoulli_number(j));
}
