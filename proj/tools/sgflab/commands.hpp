#pragma once

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgflab {

using nlohmann::json;

// Malformed configuration; reported as a schema error with exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunContext {
  std::uint64_t seed = 1;
  int threads = 1;
};

struct CommandResult {
  std::string csv;  // results.csv
  std::vector<std::pair<std::string, std::string>> extra_files;
  std::string spectrum_hash;
  std::vector<std::string> failures;  // computations that did not converge
  std::vector<std::string> notes;
  json summary = json::object();
};

const std::vector<std::string>& command_names();
json command_defaults(const std::string& command);
// One line per CSV column, for --help.
std::string command_columns(const std::string& command);

// Defaults overlaid with `user`; unknown top-level keys are a ConfigError.
json merge_config(const std::string& command, const json& user);

CommandResult run_command(const std::string& command, const json& config, const RunContext& ctx);

}  // namespace sgflab
