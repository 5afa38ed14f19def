#pragma once

#include <optional>
#include <string>

#include "swalg/config.hpp"
#include "swalg/report.hpp"

namespace swalg {

struct CommandOptions {
  std::string command;  // verify | derive | numcheck
  std::string config_path;
  std::optional<int> n;
  bool exact = false;
  std::optional<std::string> out;
  std::string format = "json";
  bool timings = false;
  std::optional<std::string> inject_fault;  // test hook, e.g. "B1"
};

Report run_verify(const RunConfig& config, const CommandOptions& opts);
Report run_derive(const RunConfig& config, const CommandOptions& opts);
Report run_numcheck(const RunConfig& config, const CommandOptions& opts);

struct CommandOutcome {
  int exit_code = 0;
  std::string rendered;  // report text in the requested format
  std::string message;   // diagnostics for stderr
};

// Loads the config, runs the command, renders the report. Never throws:
// configuration and usage errors give exit code 2.
CommandOutcome execute(const CommandOptions& opts);

// Full command line entry point.
int cli_main(int argc, char** argv);

}  // namespace swalg
