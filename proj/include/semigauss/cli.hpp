#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semigauss::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted for the default `verify` seed.
inline constexpr const char* kSeedEnv = "SEMIGAUSS_SEED";

/// Runs one request. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semigauss::cli
