#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace disjunct::cli {

inline constexpr int exit_ok = 0;       // property verified / command succeeded
inline constexpr int exit_refuted = 1;  // property refuted, witness printed
inline constexpr int exit_error = 2;    // usage, I/O, or parse error

/// Run one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace disjunct::cli
