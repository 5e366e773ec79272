#include "bernzeta/kernels.hpp"

namespace bernzeta::kernels {

Integer reciprocal_power_sum_serial(unsigned exponent, std::uint64_t terms, const Integer& scale) {
  Integer total = 0;
  Integer denom;
  for (std::uint64_t n = 1; n <= terms; ++n) {
    mpz_ui_pow_ui(denom.get_mpz_t(), n, exponent);
    if (denom > scale) break;  // every later floor is zero
    total += scale / denom;
  }
  return total;
}

}  // namespace bernzeta::kernels
