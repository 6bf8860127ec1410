#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace balseg {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_cap = 3;
inline constexpr int exit_inconsistent = 4;

// Complete command-line front end; args excludes the program name. Normal
// output goes to out, diagnostics to err; the return value is the process
// exit code (exit_* above).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace balseg
