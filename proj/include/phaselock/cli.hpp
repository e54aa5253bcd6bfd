#pragma once

namespace phaselock::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr unsigned long long kDefaultSeed = 424243ull;

/// Parse argv and run one subcommand. Returns 0 on success, 2 on parameter or
/// usage errors, 3 on numerical failures.
int run(int argc, const char* const* argv);

}  // namespace phaselock::cli
