#pragma once

#include <string>
#include <vector>

#include "dioph/cli/config.hpp"
#include "dioph/error.hpp"

namespace dioph::cli {

/// Subcommand names in display order.
const std::vector<std::string>& command_names();

/// Runs the experiment and returns the rendered output (json or tsv).
/// Throws dioph::Error; HardAssertion and CounterexampleFound mark violated theorems.
std::string run(const ExperimentConfig& config);

/// Exit status for an error raised by run: 2 for a violated theorem, 1 otherwise.
int exit_code_for(const Error& e);

}  // namespace dioph::cli
