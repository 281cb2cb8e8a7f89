#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace inclusionkit {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_out_of_scope = 3;
inline constexpr int exit_infeasible = 10;
inline constexpr int exit_verify_failed = 11;
inline constexpr int exit_budget = 20;

/// Runs one command; args excludes the program name.
///   check PROBLEM
///   construct PROBLEM --delta R --out FILE [--obj FILE] [--csv FILE]
///   verify PROBLEM SOLUTION --delta R [--faults K --seed S]
///   export SOLUTION [--obj FILE] [--csv FILE]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace inclusionkit
