#include <doctest.h>

#include "bernzeta/bernoulli.hpp"
#include "bernzeta/fourier.hpp"
#include "bernzeta/zeta.hpp"

using namespace bernzeta;

TEST_CASE("inner products") {
  CHECK(inner_product_closed(1, 1) == Rational(1, 12));
  CHECK(inner_product_closed(1, 2) == 0);
  CHECK(inner_product_closed(2, 2) == Rational(1, 180));
  CHECK(inner_product_closed(3, 1) == inner_product_closed(1, 3));
  CHECK_THROWS_AS(inner_product_closed(0, 2), DomainError);
  CHECK_THROWS_AS(inner_product_closed(2, 0), DomainError);

  CHECK(inner_product_exact(1, 1) == Rational(1, 12));
  CHECK(inner_product_exact(0, 0) == 1);
  for (unsigned k = 1; k <= 12; ++k)
    for (unsigned l = k; l <= 12; ++l) CHECK(inner_product_closed(k, l) == inner_product_exact(k, l));
}

TEST_CASE("zeta at even integers") {
  CHECK(zeta_even(1) == ZetaValue{Rational(1, 6), 2});
  CHECK(zeta_even(2) == ZetaValue{Rational(1, 90), 4});
  CHECK(zeta_even(3) == ZetaValue{Rational(1, 945), 6});
  CHECK(zeta_even(4) == ZetaValue{Rational(1, 9450), 8});
  CHECK(zeta_even(6) == ZetaValue{Rational(691, 638512875), 12});
  for (unsigned k = 1; k <= 30; ++k) CHECK(zeta_even(k).coeff.sign() > 0);
  CHECK_THROWS_AS(zeta_even(0), DomainError);
}

TEST_CASE("zeta text forms") {
  CHECK(zeta_even(1).to_string() == "pi^2/6");
  CHECK(zeta_even(6).to_string() == "691*pi^12/638512875");
  CHECK(zeta_even(1).to_latex() == "\\frac{\\pi^2}{6}");
  CHECK(zeta_even(6).to_latex() == "\\frac{691\\pi^{12}}{638512875}");
}

TEST_CASE("parseval bookkeeping is an exact identity") {
  for (unsigned k = 1; k <= 15; ++k) {
    const Rational kf(factorial(k));
    const Rational lhs = inner_product_closed(k, k);
    CHECK(lhs == Rational(2) * kf * kf / Rational(pow_ui(Integer(2), 2 * k)) * zeta_even(k).coeff);
  }
}

TEST_CASE("zeta from Parseval on a polynomial") {
  CHECK(zeta_even_via_parseval(Polynomial::monomial(1)) == ZetaValue{Rational(1, 6), 2});
  for (unsigned k = 1; k <= 12; ++k) CHECK(zeta_even_via_parseval(bernoulli_polynomial(k)) == zeta_even(k));
  CHECK_THROWS_AS(zeta_even_via_parseval(Polynomial::monomial(2)), DomainError);
  CHECK_THROWS_AS(zeta_even_via_parseval(Polynomial::constant(1)), DomainError);
}

TEST_CASE("zeta at negative integers") {
  CHECK(zeta_negative(1) == Rational(-1, 12));
  CHECK(zeta_negative(2) == 0);
  CHECK(zeta_negative(3) == Rational(1, 120));
  for (unsigned k = 1; k <= 30; ++k) {
    CHECK(zeta_negative(2 * k - 1) == -bernoulli_number(2 * k) / Rational(2 * k));
    CHECK(zeta_negative(2 * k) == 0);
  }
  CHECK_THROWS_AS(zeta_negative(0), DomainError);
}

TEST_CASE("zeta_at domain") {
  CHECK(std::get<ZetaValue>(zeta_at(2)) == zeta_even(1));
  CHECK(std::get<Rational>(zeta_at(-3)) == Rational(1, 120));
  CHECK_THROWS_WITH_AS(zeta_at(3), doctest::Contains("no exact closed form"), DomainError);
  CHECK_THROWS_WITH_AS(zeta_at(1), doctest::Contains("pole"), DomainError);
  CHECK_THROWS_AS(zeta_at(0), DomainError);
}

TEST_CASE("parseval report with one term") {
  const ParsevalReport r = parseval_verify(1, 1, 30);
  CHECK(r.lhs == Rational(1, 12));
  // partial = tail bound = 1/(2 pi^2) = 0.05066059182116888572...
  CHECK(r.partial_text().substr(0, 22) == "0.05066059182116888572");
  CHECK(r.tail_bound_text().substr(0, 22) == "0.05066059182116888572");
  // 1/12 - 1/(2 pi^2) = 0.03267274151216444761...
  CHECK(r.residual_text().substr(0, 22) == "0.03267274151216444761");
  CHECK(r.residual.lo > 0);
  CHECK(r.pass);
}

TEST_CASE("parseval report for zeta(2) with 1000 terms") {
  const ParsevalReport r = parseval_verify(1, 1000, 30);
  CHECK(r.residual.lo > 0);
  CHECK(r.pass);
  CHECK(r.residual.upper() <= r.tail_bound.lower());
  // 1/(2 pi^2 1000)
  CHECK(r.tail_bound_text().substr(0, 14) == "0.000050660591");
}

TEST_CASE("parseval residuals decrease and stay under the tail bound") {
  for (unsigned k = 1; k <= 5; ++k) {
    std::vector<ParsevalReport> reports;
    for (std::uint64_t n : {100ull, 1000ull, 10000ull}) reports.push_back(parseval_verify(k, n, 30));
    for (const auto& r : reports) {
      CHECK(r.residual.lo > 0);
      CHECK(r.pass);
      CHECK(r.residual.lower() > Rational(0));
    }
    CHECK(reports[0].residual.lower() > reports[1].residual.upper());
    CHECK(reports[1].residual.lower() > reports[2].residual.upper());
  }
}

TEST_CASE("parseval schedules agree") {
  const auto a = parseval_verify(3, 5000, 30, kernels::Schedule::serial);
  const auto b = parseval_verify(3, 5000, 30, kernels::Schedule::parallel);
  CHECK(a.residual_text() == b.residual_text());
  CHECK(a.partial.lo == b.partial.lo);
  CHECK(a.partial.hi == b.partial.hi);
}

TEST_CASE("parseval argument checks") {
  CHECK_THROWS_AS(parseval_verify(0, 10), DomainError);
  CHECK_THROWS_AS(parseval_verify(1, 0), UsageError);
}
