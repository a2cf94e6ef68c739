#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bohr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitInput = 3;

inline constexpr unsigned long long kDefaultSeed = 20240601ULL;

/// Runs one invocation. `args` excludes the program name. `env_seed` is the
/// value of BOHR_OPLIB_SEED, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed = std::nullopt);

/// The demo transcript (also what `bohr demo` prints).
std::string demo_transcript();

}  // namespace bohr::cli
