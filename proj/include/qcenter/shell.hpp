#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcenter {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_input_error = 2;

/// The qcenter command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcenter
