#pragma once

#include <string>
#include <vector>

#include "gci/cli/config.hpp"
#include "gci/cli/report.hpp"

namespace gci::cli {

// cohomology, kernel, equations, scan, moduli, quotient, example.
const std::vector<std::string>& command_names();

// Runs one command; "example" runs the config's pipeline. Throws the
// library's error types, which the caller maps to exit codes.
Report run_command(const std::string& command, const JobConfig& cfg);

}  // namespace gci::cli
