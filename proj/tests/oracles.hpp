#pragma once

// Test-only reference computations. Nothing here calls into the library
// routes it is used to check.

#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// atan(1/x) * one via Euler's series
//   atan(1/x) = sum_k 2^{2k} (k!)^2 / (2k+1)! * x / (1 + x^2)^{k+1},
// a different expansion from the alternating Taylor series.
inline mpz_class euler_arctan_inverse(unsigned long x, const mpz_class& one) {
  const mpz_class y = mpz_class(x) * x + 1;
  mpz_class term = one * x / y;
  mpz_class sum = term;
  for (unsigned long k = 1; term != 0; ++k) {
    term = term * (2 * k) / ((2 * k + 1) * y);
    sum += term;
  }
  return sum;
}

// pi to `digits` places, truncated, via Gauss's formula
//   pi = 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239).
inline std::string gauss_pi_digits(std::size_t digits) {
  mpz_class one;
  mpz_ui_pow_ui(one.get_mpz_t(), 10, digits + 30);
  mpz_class pi = 48 * euler_arctan_inverse(18, one) + 32 * euler_arctan_inverse(57, one) -
                 20 * euler_arctan_inverse(239, one);
  mpz_class guard;
  mpz_ui_pow_ui(guard.get_mpz_t(), 10, 30);
  pi /= guard;
  std::string s = pi.get_str();
  return s.substr(0, 1) + "." + s.substr(1);
}

// Bernoulli numbers B_0..B_{count-1} by the Akiyama-Tanigawa algorithm. It
// produces B_1 = +1/2, so the sign of B_1 is flipped to match B_1 = -1/2.
inline std::vector<mpq_class> akiyama_tanigawa(std::size_t count) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(count);
  for (std::size_t m = 0; m < count; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (std::size_t j = m; j >= 1; --j) {
      a[j - 1] = mpq_class(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  if (count > 1) out[1] = -out[1];
  return out;
}

// Gauss-Legendre nodes/weights on [0, 1] by Newton iteration on P_n.
struct Quadrature {
  std::vector<long double> nodes;
  std::vector<long double> weights;
};

inline Quadrature gauss_legendre(int n) {
  Quadrature q;
  const long double pi = std::acos(-1.0L);
  for (int i = 1; i <= n; ++i) {
    long double x = std::cos(pi * (i - 0.25L) / (n + 0.5L));
    long double dp = 0;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    q.nodes.push_back((x + 1) / 2);
    q.weights.push_back(1 / ((1 - x * x) * dp * dp));  // 2/((1-x^2)P'^2) halved for [0,1]
  }
  return q;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

}  // namespace oracle
