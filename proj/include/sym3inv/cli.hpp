#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace sym3::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsage = 2,           // unknown subcommand or bad arguments
  kMalformedInput = 3,  // tensor file is not valid sym3-v1 JSON
  kFieldMismatch = 4,   // exact-only operation given a float tensor
  kUnreadableFile = 5,
};

struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  bool pass = false;
  double wall_time_seconds = 0.0;

  nlohmann::json to_json() const;
};

struct Outcome {
  int exit_code = kUsage;
  bool has_report = false;
  RunReport report;
  std::string out;  // text for standard output: the pretty report or help
  std::string err;  // diagnostics for standard error
};

/// Parses argv (argv[0] is the program name) and runs the named pipeline.
/// Never throws for bad input; failures map to the exit codes above.
Outcome run(const std::vector<std::string>& argv);

}  // namespace sym3::cli
