#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hm {

// Exit codes of the command-line front end.
enum ExitCode : int { exit_pass = 0, exit_failure = 1, exit_usage = 2 };

// hmtool check | verify | compute | crossed | groups; see --help. Reports go
// to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hm
