#ifndef DRINFELD_TOOLS_CLI_HPP
#define DRINFELD_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace drinfeld::cli {

struct CommandResult {
    bool ok = true;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    std::vector<std::string> diagnostics;
};

/// Exit codes of run().
enum ExitCode : int { exit_ok = 0, exit_domain = 1, exit_usage = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drinfeld::cli

#endif  // DRINFELD_TOOLS_CLI_HPP
