#include "bernzeta/kernels.hpp"

#include <omp.h>

namespace bernzeta::kernels {

Integer reciprocal_power_sum_parallel(unsigned exponent, std::uint64_t terms, const Integer& scale) {
  Integer total = 0;
  const auto count = static_cast<std::int64_t>(terms);
#pragma omp parallel
  {
    Integer local = 0;
    Integer denom;
    // Terms shrink with n, so interleave chunks to balance the big divisions.
#pragma omp for schedule(static, 64) nowait
    for (std::int64_t n = 1; n <= count; ++n) {
      mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(n), exponent);
      if (denom <= scale) local += scale / denom;
    }
#pragma omp critical(bernzeta_reciprocal_power_sum)
    total += local;
  }
  return total;
}

}  // namespace bernzeta::kernels
