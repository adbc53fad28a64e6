#pragma once

#include <ostream>

namespace cc {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Parses argv (argv[0] is the program name) and runs one subcommand. Output is deterministic for fixed
// arguments, including --rng-seed, regardless of --threads.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cc
