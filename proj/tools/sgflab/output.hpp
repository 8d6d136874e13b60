#pragma once

#include "commands.hpp"

#include <filesystem>

namespace sgflab {

// Writes manifest.json, results.csv and extra files into
// <root>/<command>/<timestamp>-<hash>/, staging in a temporary directory
// that is renamed into place once every file is complete.
std::filesystem::path write_run(const std::filesystem::path& root, const std::string& command,
                                const json& manifest, const CommandResult& result);

// 12 hex digits identifying (command, config, seed).
std::string run_hash(const std::string& command, const json& config, std::uint64_t seed);

std::string utc_timestamp();

}  // namespace sgflab
