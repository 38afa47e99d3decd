#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domcrit::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
	exit_ok = 0,
	exit_verification_failed = 1,
	exit_usage = 2,
	exit_budget = 3,
};

// Runs one invocation. args excludes the program name; in stands in for "-".
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace domcrit::cli
