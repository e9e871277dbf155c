#pragma once

// Subcommands of the affschur tool. Each returns the JSON report together with
// the process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "affschur/serialize.hpp"

namespace affschur {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitSchema = 2,
  kExitDomain = 3,
  kExitResource = 4,
};

struct RunConfig {
  int n = 2;
  std::optional<int> r;  // dmap and dims default to the input size, others to 2
  std::optional<int> N;
  std::string suite = "all";
  int tmax = 2;
  std::optional<std::pair<int, int>> window;
  std::optional<std::string> grid_file;
  std::uint64_t seed = 20240601;
  std::optional<std::string> v_rational;
  std::optional<std::string> out;
  bool json = false;
  std::optional<std::string> segments;  // JSON text or @path
  std::optional<std::string> tuple;     // JSON text or @path
};

struct CommandResult {
  Json report;
  int exit_code = kExitOk;
};

CommandResult cmd_dmap(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_dims(const RunConfig& config);
CommandResult cmd_enum(const RunConfig& config);

// Runs cmd_<name> and turns exceptions into an error report with the
// documented exit code.
CommandResult run_command(const std::string& name, const RunConfig& config);

// Full command line handling: parses argv, runs the subcommand, writes the
// report (JSON with --json, a one-line summary otherwise) and --out file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace affschur
