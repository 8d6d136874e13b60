#include "output.hpp"

#include "sgf/numerics.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace sgflab {

namespace fs = std::filesystem;

std::string run_hash(const std::string& command, const json& config, std::uint64_t seed) {
  const std::string text = command + "\n" + config.dump() + "\n" + std::to_string(seed);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(sgf::num::fnv1a(text.data(), text.size())));
  return std::string(buf, 12);
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

namespace {

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + p.string());
  os << text;
  if (!os) throw std::runtime_error("write failed: " + p.string());
}

}  // namespace

fs::path write_run(const fs::path& root, const std::string& command, const json& manifest,
                   const CommandResult& result) {
  const fs::path parent = root / command;
  fs::create_directories(parent);
  const std::string name = utc_timestamp() + "-" + manifest.at("run_hash").get<std::string>();
  fs::path final_dir = parent / name;
  for (int k = 1; fs::exists(final_dir); ++k) final_dir = parent / (name + "." + std::to_string(k));
  const fs::path tmp = parent / (".tmp-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  write_file(tmp / "results.csv", result.csv);
  for (const auto& [file, text] : result.extra_files) write_file(tmp / file, text);
  write_file(tmp / "manifest.json", manifest.dump(2) + "\n");
  fs::rename(tmp, final_dir);
  return final_dir;
}

}  // namespace sgflab
