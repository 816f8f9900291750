#pragma once

#include <colrec/cli/run_config.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace colrec::cli {

/// Executes a parsed configuration, writing the result to `out`. Returns the
/// process exit code; library exceptions propagate.
int execute(const RunConfig& config, std::ostream& out);

/// Full front end: parse, execute, map errors to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colrec::cli
