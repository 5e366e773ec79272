#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bernzeta::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_domain = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on usage errors and 2 on
/// mathematical domain errors. Output is deterministic for fixed args.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bernzeta::cli
