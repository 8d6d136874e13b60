#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string dir;
};

fs::path scratch() {
  static fs::path root = [] {
    auto p = fs::temp_directory_path() / ("sgflab-cli-" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return root;
}

Run sgflab(const std::string& args, const json* config = nullptr, const std::string& tag = "cfg") {
  std::string cmd = std::string(SGFLAB_PATH) + " " + args + " --out " + (scratch() / "out").string();
  if (config) {
    auto path = scratch() / (tag + ".json");
    std::ofstream(path) << config->dump();
    cmd += " --config " + path.string();
  }
  cmd += " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[512];
  while (std::fgets(buf, sizeof buf, p)) r.dir += buf;
  int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  while (!r.dir.empty() && (r.dir.back() == '\n' || r.dir.back() == '\r')) r.dir.pop_back();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> rows(const std::string& csv) {
  std::vector<std::vector<std::string>> out;
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    out.push_back(cells);
  }
  return out;
}

}  // namespace

TEST_CASE("delta capacity is one") {
  json cfg{{"measure", {{"kind", "delta"}}}, {"T", {1.0, 4.0}}};
  auto r = sgflab("capacity", &cfg);
  REQUIRE(r.code == 0);
  auto rs = rows(slurp(fs::path(r.dir) / "results.csv"));
  REQUIRE(rs.size() == 2);
  for (const auto& row : rs) CHECK(std::stod(row[3]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fs::exists(fs::path(r.dir) / "solution.csv"));
  auto m = json::parse(slurp(fs::path(r.dir) / "manifest.json"));
  CHECK(m["command"] == "capacity");
  CHECK(m["status"] == "ok");
  CHECK(m["spectrum_hash"].get<std::string>().size() > 0);
  for (const char* k : {"config", "seed", "threads", "tool_version", "wall_time_s", "run_hash", "files"})
    CHECK(m.contains(k));
}

TEST_CASE("riesz table values") {
  json cfg{{"alphas", {0.0, 1.0}}, {"dims", {3}}, {"radii", {0.5}}};
  auto r = sgflab("riesz-table", &cfg);
  REQUIRE(r.code == 0);
  auto rs = rows(slurp(fs::path(r.dir) / "results.csv"));
  REQUIRE(rs.size() == 2);
  CHECK(std::stod(rs[0][3]) == doctest::Approx(1.0));
  CHECK(std::stod(rs[1][3]) == doctest::Approx(4.0));
  CHECK(std::stod(rs[1][5]) == doctest::Approx(1.0));

  json empty{{"alphas", json::array()}};
  auto e = sgflab("riesz-table", &empty, "empty");
  REQUIRE(e.code == 0);
  CHECK(slurp(fs::path(e.dir) / "results.csv") == "alpha,d,regime,c_alpha,r,h_alpha\n");
}

TEST_CASE("malformed configs are rejected") {
  json unknown{{"bogus", 1}};
  CHECK(sgflab("capacity", &unknown, "unknown").code == 2);
  json wrong_type{{"T", "four"}};
  CHECK(sgflab("capacity", &wrong_type, "wrong").code == 2);
  json bad_kind{{"measure", {{"kind", "nope"}}}};
  CHECK(sgflab("persist", &bad_kind, "kind").code == 2);
  json bad_cantor{{"which", "cantor"}, {"cantor", {{"J", {0, 3}}, {"depth", 2}}}};
  CHECK(sgflab("counterexample", &bad_cantor, "cantor").code == 2);
  std::ofstream(scratch() / "broken.json") << "{not json";
  CHECK(sgflab("capacity --config " + (scratch() / "broken.json").string()).code == 2);
  CHECK(sgflab("no-such-command").code == 2);
}

TEST_CASE("same config reproduces identical csv bytes") {
  json cfg{{"measure", {{"kind", "iid"}, {"N", 4}}}, {"domain", {{"kind", "sites"}, {"N", 4}}}, {"n_samples", 20000}};
  auto a = sgflab("persist --seed 7", &cfg, "rep");
  auto b = sgflab("persist --seed 7 --threads 3", &cfg, "rep");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.dir != b.dir);
  CHECK(slurp(fs::path(a.dir) / "results.csv") == slurp(fs::path(b.dir) / "results.csv"));

  // Feeding a manifest back in reruns the same config.
  auto c = sgflab("persist --seed 7 --config " + (fs::path(a.dir) / "manifest.json").string());
  REQUIRE(c.code == 0);
  CHECK(slurp(fs::path(a.dir) / "results.csv") == slurp(fs::path(c.dir) / "results.csv"));
}

TEST_CASE("cantor intervals") {
  json cfg{{"which", "cantor"}, {"cantor", {{"J", {1, 2}}, {"depth", 2}}}};
  auto r = sgflab("counterexample", &cfg);
  REQUIRE(r.code == 0);
  auto rs = rows(slurp(fs::path(r.dir) / "results.csv"));
  REQUIRE(rs.size() == 4);
  for (const auto& row : rs) CHECK(std::stod(row[2]) == doctest::Approx(0.25));
}

TEST_CASE("iid lattice persistence") {
  json cfg{{"measure", {{"kind", "iid"}, {"N", 8}}}, {"domain", {{"kind", "sites"}, {"N", 8}}}, {"n_samples", 200000}};
  auto r = sgflab("persist", &cfg, "iid");
  REQUIRE(r.code == 0);
  auto rs = rows(slurp(fs::path(r.dir) / "results.csv"));
  REQUIRE(rs.size() == 1);
  const double p = std::stod(rs[0][5]), se = std::stod(rs[0][7]);
  CHECK(std::abs(p - 1.0 / 256.0) < 4.0 * se);
}
