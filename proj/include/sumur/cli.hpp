#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumur {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalid = 2;

/// Entry point of the `sumur` tool; args excludes the program name.
/// Returns 0 on success, 1 when `verify` finds a violation, 2 on bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumur
