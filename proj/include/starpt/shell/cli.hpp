/**
 * @file cli.hpp
 * @brief Command-line front end. Exit codes: 0 success, 2 bad input or
 *        usage, 1 internal failure (including a failing selftest).
 */
#ifndef STARPT_SHELL_CLI_HPP
#define STARPT_SHELL_CLI_HPP

#include <cstdint>
#include <iosfwd>

namespace starpt::shell {

inline constexpr std::uint64_t kDefaultSeed = 7;

/// Name of the environment variable that overrides the default seed.
inline constexpr const char* kSeedVariable = "STARPT_SEED";

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace starpt::shell

#endif
