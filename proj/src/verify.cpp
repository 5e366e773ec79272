#include "bernzeta/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <utility>

#include "bernzeta/bernoulli.hpp"
#include "bernzeta/fourier.hpp"

namespace bernzeta {

bool VerifyReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

namespace {

// body returns an empty string on success, otherwise a description of the
// first mismatch.
template <class Body>
CheckResult run_check(std::string name, Body&& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.detail = body();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.pass = r.detail.empty();
  return r;
}

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
  return what + ": got " + got + ", expected " + want;
}

std::string check_bernoulli_gf() {
  const auto gf = bernoulli_numbers_via_gf(61);
  for (std::size_t j = 0; j <= 60; ++j)
    if (bernoulli_number(j) != gf[j])
      return mismatch("B_" + std::to_string(j), bernoulli_number(j).to_string(), gf[j].to_string());
  const Rational printed[] = {1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42), 0};
  for (std::size_t j = 0; j < 8; ++j)
    if (bernoulli_number(j) != printed[j])
      return mismatch("B_" + std::to_string(j), bernoulli_number(j).to_string(), printed[j].to_string());
  return {};
}

std::string check_odd_vanishing() {
  for (std::size_t k = 1; k <= 30; ++k)
    if (!bernoulli_number(2 * k + 1).is_zero()) return "B_" + std::to_string(2 * k + 1) + " is nonzero";
  return {};
}

std::string check_boundary_values() {
  for (std::size_t p = 2; p <= 30; ++p) {
    const Polynomial b = bernoulli_polynomial(p);
    if (b(0) != bernoulli_number(p) || b(1) != bernoulli_number(p))
      return "B_" + std::to_string(p) + "(0), B_p(1), B_p disagree";
  }
  return {};
}

std::string check_derivative_ladder() {
  for (std::size_t p = 1; p <= 30; ++p)
    if (bernoulli_polynomial(p).derivative() != bernoulli_polynomial(p - 1) * Rational(p))
      return "B_" + std::to_string(p) + "' != p B_{p-1}";
  return {};
}

std::string check_power_sum_derivative() {
  for (std::size_t p = 0; p <= 20; ++p)
    if (power_sum_polynomial(p).derivative() != bernoulli_polynomial(p))
      return "S_" + std::to_string(p) + "' != B_" + std::to_string(p);
  return {};
}

std::string check_faulhaber_bruteforce() {
  for (std::size_t p = 0; p <= 12; ++p) {
    const Polynomial s = power_sum_polynomial(p);
    for (long m : {1, 2, 10, 100, 1000}) {
      const Rational want = power_sum_bruteforce(p, m);
      if (s(m) != want)
        return mismatch("S_" + std::to_string(p) + "(" + std::to_string(m) + ")", s(m).to_string(), want.to_string());
    }
  }
  return {};
}

std::string check_faulhaber_recursion() {
  for (std::size_t p = 0; p <= 20; ++p)
    if (power_sum_polynomial(p) != power_sum_recursive(p))
      return mismatch("S_" + std::to_string(p), power_sum_polynomial(p).to_string(), power_sum_recursive(p).to_string());
  return {};
}

std::string check_fourier_closed_vs_ibp() {
  constexpr int max_k = 10;
  constexpr int max_n = 20;
  std::vector<Polynomial> polys;
  for (int k = 0; k <= max_k; ++k) polys.push_back(bernoulli_polynomial(k));

  constexpr int cells = max_k * 2 * max_n;
  std::vector<char> ok(cells, 0);
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < cells; ++c) {
    const int k = 1 + c / (2 * max_n);
    const int j = c % (2 * max_n);
    const std::int64_t n = j < max_n ? j + 1 : -(j - max_n + 1);
    ok[c] = fourier_coeff_ibp(polys[k], n) == fourier_coeff_closed(k, n);
  }
  for (int c = 0; c < cells; ++c)
    if (!ok[c]) return "c_n(B_k) mismatch at grid cell " + std::to_string(c);
  for (unsigned k = 1; k <= 20; ++k)
    if (fourier_coeff_ibp(bernoulli_polynomial(k), 0) != FourierValue(Rational(0)))
      return "c_0(B_" + std::to_string(k) + ") != 0";
  return {};
}

std::string check_inner_products() {
  for (unsigned k = 1; k <= 12; ++k)
    for (unsigned l = k; l <= 12; ++l)
      if (inner_product_closed(k, l) != inner_product_exact(k, l))
        return mismatch("A_{" + std::to_string(k) + "," + std::to_string(l) + "}",
                        inner_product_closed(k, l).to_string(), inner_product_exact(k, l).to_string());
  return {};
}

std::string check_parseval_bookkeeping(unsigned max_k) {
  for (unsigned k = 1; k <= 15; ++k) {
    // int B_k^2 = 2 (k!)^2 2^{-2k} * coeff, with zeta(2k) = coeff pi^{2k}
    const Rational kf(factorial(k));
    const Rational rhs = Rational(2) * kf * kf / Rational(pow_ui(Integer(2), 2 * k)) * zeta_even(k).coeff;
    if (inner_product_closed(k, k) != rhs) return "Parseval bookkeeping fails at k = " + std::to_string(k);
  }
  for (unsigned k = 1; k <= std::max(max_k, 10u); ++k)
    if (zeta_even_via_parseval(bernoulli_polynomial(k)) != zeta_even(k))
      return "Parseval route for B_" + std::to_string(k) + " disagrees with the closed form";
  return {};
}

std::string check_zeta_positive() {
  for (unsigned k = 1; k <= 30; ++k)
    if (zeta_even(k).coeff.sign() <= 0) return "zeta(" + std::to_string(2 * k) + ") coefficient not positive";
  return {};
}

std::string check_monomial() {
  const Polynomial t = Polynomial::monomial(1);
  if (fourier_coeff_ibp(t, 0) != FourierValue(Rational(1, 2))) return "c_0(t) != 1/2";
  for (std::int64_t n : {1, -1, 7})
    if (fourier_coeff_ibp(t, n) != FourierValue(FourierExact(n, {{1u, Rational(-1)}})))
      return "c_n(t) != -1/(2 pi i n)";
  const ZetaValue z = zeta_even_via_parseval(t);
  if (z != ZetaValue{Rational(1, 6), 2}) return mismatch("zeta(2) from t", z.to_string(), "pi^2/6");
  return {};
}

std::string check_negative_values() {
  for (unsigned k = 1; k <= 30; ++k) {
    if (zeta_negative(2 * k - 1) != -bernoulli_number(2 * k) / Rational(2 * k))
      return "zeta(" + std::to_string(1 - 2 * static_cast<int>(k)) + ") != -B_2k/2k";
    if (!zeta_negative(2 * k).is_zero()) return "zeta(-" + std::to_string(2 * k) + ") != 0";
  }
  return {};
}

}  // namespace

VerifyReport verify_all(unsigned max_k, std::uint64_t terms) {
  VerifyReport out;
  auto& c = out.checks;
  c.push_back(run_check("bernoulli_recursion_vs_gf", check_bernoulli_gf));
  c.push_back(run_check("bernoulli_odd_vanishing", check_odd_vanishing));
  c.push_back(run_check("bernoulli_boundary_values", check_boundary_values));
  c.push_back(run_check("bernoulli_derivative_ladder", check_derivative_ladder));
  c.push_back(run_check("power_sum_derivative", check_power_sum_derivative));
  c.push_back(run_check("faulhaber_vs_bruteforce", check_faulhaber_bruteforce));
  c.push_back(run_check("faulhaber_vs_recursion", check_faulhaber_recursion));
  c.push_back(run_check("fourier_closed_vs_ibp", check_fourier_closed_vs_ibp));
  c.push_back(run_check("inner_product_closed_vs_exact", check_inner_products));
  c.push_back(run_check("zeta_parseval_bookkeeping", [&] { return check_parseval_bookkeeping(max_k); }));
  c.push_back(run_check("zeta_even_positive", check_zeta_positive));
  c.push_back(run_check("monomial_recovers_zeta2", check_monomial));
  c.push_back(run_check("zeta_negative_vs_bernoulli", check_negative_values));

  for (unsigned k = 1; k <= max_k; ++k) {
    const std::string name = "parseval_k" + std::to_string(k) + "_n" + std::to_string(terms);
    c.push_back(run_check(name, [&]() -> std::string {
      ParsevalReport r = parseval_verify(k, terms);
      std::string detail;
      if (r.residual.lo <= 0)
        detail = "residual not certified positive";
      else if (!r.pass)
        detail = "residual " + r.residual_text() + " exceeds tail bound " + r.tail_bound_text();
      out.parseval.push_back(std::move(r));
      return detail;
    }));
  }
  return out;
}

}  // namespace bernzeta
