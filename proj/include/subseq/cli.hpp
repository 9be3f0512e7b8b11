#pragma once

#include <iosfwd>

namespace subseq::cli {

/// Exit codes: 0 success, 1 validation failure, 2 exhaustive-guard violation.
enum ExitCode : int { ok = 0, invalid = 1, guard = 2 };

/// Environment variable consulted for the default --seed.
inline constexpr const char* seed_env_var = "SUBSEQ_SEED";

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace subseq::cli
