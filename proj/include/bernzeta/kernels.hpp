#pragma once

#include <cstdint>

#include "bernzeta/integer.hpp"

namespace bernzeta::kernels {

/// sum_{n=1}^{terms} floor(scale / n^exponent).
///
/// Each summand is an exact integer, so the result is independent of the
/// summation order; the serial and OpenMP versions are bit-identical. The
/// true sum scale * sum n^{-exponent} lies in [result, result + terms).
Integer reciprocal_power_sum_serial(unsigned exponent, std::uint64_t terms, const Integer& scale);
Integer reciprocal_power_sum_parallel(unsigned exponent, std::uint64_t terms, const Integer& scale);

enum class Schedule { serial, parallel };

inline Integer reciprocal_power_sum(unsigned exponent, std::uint64_t terms, const Integer& scale,
                                    Schedule schedule = Schedule::parallel) {
  return schedule == Schedule::serial ? reciprocal_power_sum_serial(exponent, terms, scale)
                                      : reciprocal_power_sum_parallel(exponent, terms, scale);
}

}  // namespace bernzeta::kernels
