#include "commands.hpp"
#include "output.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

constexpr const char* kVersion = "0.1.0";

nlohmann::json load_config(const std::string& path) {
  if (path.empty()) return nullptr;
  std::ifstream is(path);
  if (!is) throw sgflab::ConfigError("cannot read config " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw sgflab::ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  // A run manifest can be passed back in to reproduce the run.
  if (j.is_object() && j.contains("config") && j.contains("command")) return j.at("config");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for stationary Gaussian fields"};
  app.set_version_flag("--version", kVersion);
  std::string config_path, out_dir = "out";
  std::uint64_t seed = 1;
  int threads = 1;
  bool print_defaults = false;
  app.add_option("--config", config_path, "JSON config (or a manifest.json from an earlier run)");
  app.add_option("--seed", seed, "master seed")->capture_default_str();
  app.add_option("--out", out_dir, "output root")->capture_default_str();
  app.add_option("--threads", threads, "worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--print-defaults", print_defaults, "print the default config of the command and exit");
  std::map<std::string, CLI::App*> subs;
  // Global options may also follow the subcommand name.
  for (const auto& name : sgflab::command_names()) {
    subs[name] = app.add_subcommand(name, "")->footer(sgflab::command_columns(name))->fallthrough();
  }
  subs["riesz-table"]->description("closed-form Riesz capacities c_alpha and potentials h_alpha");
  subs["capacity"]->description("capacity and equilibrium measure of balls B(T)");
  subs["persist"]->description("persistence probability by naive or importance-sampled Monte Carlo");
  subs["repulsion"]->description("conditioned averages under persistence (entropic repulsion)");
  subs["counterexample"]->description("irregular capacity growth or the Cantor-type measure");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  try {
    if (print_defaults) {
      nlohmann::json all;
      if (command.empty()) {
        for (const auto& name : sgflab::command_names()) all[name] = sgflab::command_defaults(name);
      } else {
        all = sgflab::command_defaults(command);
      }
      std::cout << all.dump(2) << "\n";
      return 0;
    }
    if (command.empty()) {
      std::cerr << app.help();
      return 2;
    }
    const auto config = sgflab::merge_config(command, load_config(config_path));
    const auto t0 = std::chrono::steady_clock::now();
    auto result = sgflab::run_command(command, config, {seed, threads});
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    nlohmann::json manifest{{"command", command},
                            {"config", config},
                            {"seed", seed},
                            {"threads", threads},
                            {"spectrum_hash", result.spectrum_hash},
                            {"tool_version", kVersion},
                            {"wall_time_s", wall},
                            {"run_hash", sgflab::run_hash(command, config, seed)},
                            {"status", result.failures.empty() ? "ok" : "partial"},
                            {"failures", result.failures},
                            {"notes", result.notes},
                            {"summary", result.summary}};
    nlohmann::json files = {"results.csv"};
    for (const auto& f : result.extra_files) files.push_back(f.first);
    manifest["files"] = files;
    auto dir = sgflab::write_run(out_dir, command, manifest, result);
    std::cout << dir.string() << "\n";
    for (const auto& f : result.failures) std::cerr << "failure: " << f << "\n";
    return result.failures.empty() ? 0 : 1;
  } catch (const sgflab::ConfigError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
