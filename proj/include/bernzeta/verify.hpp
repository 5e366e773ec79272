#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bernzeta/zeta.hpp"

namespace bernzeta {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first failure, empty on success
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<ParsevalReport> parseval;

  bool pass() const;
};

/// Runs every cross-oracle check: recursion vs generating function,
/// Faulhaber vs brute force and recursion, closed-form Fourier coefficients
/// vs integration by parts, closed-form inner products vs exact integration,
/// the Parseval bookkeeping for zeta(2k), and truncated Parseval reports for
/// k = 1..max_k at `terms` frequencies.
VerifyReport verify_all(unsigned max_k, std::uint64_t terms);

}  // namespace bernzeta
