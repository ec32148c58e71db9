#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "ppart/baranyai.hpp"
#include "ppart/cli.hpp"
#include "ppart/io.hpp"

using namespace ppart;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

fs::path temp_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("ppart_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("schedule subcommand") {
  const auto r8 = run({"schedule", "--n", "8"});
  CHECK(r8.code == kExitOk);
  CHECK(count_lines(r8.out) == 35);
  std::istringstream lines(r8.out);
  for (std::string line; std::getline(lines, line);) {
    CHECK(line.find("    ") != std::string::npos);
    CHECK(std::count(line.begin(), line.end(), '+') == 4);
  }

  CHECK(run({"schedule", "--n", "4"}).out == "a+3 a+2 a-1 a-0\n");

  const auto json_out = run({"schedule", "--n", "8", "--format", "json"});
  CHECK(json_out.code == kExitOk);
  CHECK(parse_schedule(json_out.out) == build_schedule(8));

  const auto baseline = run({"schedule", "--n", "8", "--engine", "baseline", "--format", "json"});
  CHECK(baseline.code == kExitOk);
  CHECK(parse_schedule(baseline.out).rounds.size() == 35);

  CHECK(count_lines(run({"schedule", "--n", "6"}).out) == 15);  // at most one subset per padded round
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"schedule", "--n", "3"}).code == kExitUsage);
  CHECK(run({"schedule"}).code == kExitUsage);
  CHECK(run({"schedule", "--n", "8", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"stats", "--n-list", "8,x"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("schedule cache directory") {
  const auto dir = temp_dir("cache");
  CHECK(run({"schedule", "--n", "8", "--cache-dir", dir.string()}).code == kExitOk);
  CHECK(fs::exists(dir / "schedule_n8.json"));
  CHECK(run({"schedule", "--n", "8", "--cache-dir", dir.string()}).out ==
        run({"schedule", "--n", "8"}).out);
}

TEST_CASE("families subcommand") {
  const auto r = run({"families", "--n", "8", "--dominant-only"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["families"].size() == 70);
  CHECK(r.err.find("dominant=70") != std::string::npos);

  const auto dir = temp_dir("families");
  const auto full = run({"families", "--n", "8", "--out", (dir / "f.json").string(), "--format", "json"});
  CHECK(full.code == kExitOk);
  const auto summary = nlohmann::json::parse(full.out);
  CHECK(summary["dominant_family_count"] == 70);
  CHECK(summary["residual_family_count"] == 785);
  CHECK(fs::exists(dir / "f.json"));

  write_file(dir / "zeros.json", R"({"n": 8, "one_body": [], "two_body": []})");
  const auto zeros = run({"families", "--n", "8", "--hamiltonian", (dir / "zeros.json").string(),
                          "--format", "json", "--out", (dir / "z.json").string()});
  CHECK(zeros.code == kExitOk);
  CHECK(nlohmann::json::parse(zeros.out)["dominant_string_count"] == 0);

  write_file(dir / "bad.json", R"({"n": 8, "two_body": [{"pqrs": [7, 3, 5, 0], "value": 1}]})");
  CHECK(run({"families", "--n", "8", "--hamiltonian", (dir / "bad.json").string()}).code ==
        kExitUsage);
  CHECK(run({"families", "--n", "12", "--hamiltonian", (dir / "zeros.json").string()}).code ==
        kExitUsage);
  CHECK(run({"families", "--n", "8", "--hamiltonian", (dir / "none.json").string()}).code ==
        kExitUsage);
}

TEST_CASE("verify subcommand") {
  const auto ok = run({"verify"});
  CHECK(ok.code == kExitOk);
  CHECK(nlohmann::json::parse(ok.out)["passed"] == true);

  const auto dir = temp_dir("verify");
  auto s = build_schedule(8);
  s.rounds[2][0] = s.rounds[1][0];
  save_schedule(s, dir / "tampered.json");
  const auto bad = run({"verify", "--schedule-file", (dir / "tampered.json").string()});
  CHECK(bad.code == kExitVerifyFailed);
  CHECK(nlohmann::json::parse(bad.out)["passed"] == false);

  save_schedule(build_schedule(8), dir / "good.json");
  CHECK(run({"verify", "--schedule-file", (dir / "good.json").string()}).code == kExitOk);

  write_file(dir / "garbage.json", "{");
  CHECK(run({"verify", "--schedule-file", (dir / "garbage.json").string()}).code == kExitUsage);
}

TEST_CASE("stats subcommand") {
  const auto r = run({"stats", "--n-list", "8,12"});
  CHECK(r.code == kExitOk);
  CHECK(count_lines(r.out) == 3);
  const auto j = nlohmann::json::parse(run({"stats", "--n-list", "8,12", "--format", "json"}).out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["dominant_families"] == 70);
  CHECK(j[1]["dominant_families"] == 330);
  CHECK(j[1]["families_per_round"] == 2.0);
  CHECK(j[1]["strings_per_family"] == 24.0);
}
