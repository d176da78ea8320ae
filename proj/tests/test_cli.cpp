#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  std::string command = std::string(DIFUN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string last_line(const std::string& text) {
  std::size_t end = text.find_last_not_of('\n');
  std::size_t start = text.rfind('\n', end);
  return text.substr(start + 1, end - start);
}

}  // namespace

TEST_CASE("tables subcommand") {
  RunResult csv = run_cli("tables --max-n 13 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("13,27644450") != std::string::npos);
  CHECK(csv.output.find("2,1,3,3") != std::string::npos);

  RunResult text = run_cli("tables");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("rank of the whole semigroup") != std::string::npos);

  CHECK(run_cli("tables --format yaml").exit_code == 2);
  CHECK(run_cli("tables --max-n 1").exit_code == 2);
  CHECK(run_cli("tables --max-n 31").exit_code == 2);
}

TEST_CASE("rank subcommand") {
  RunResult report = run_cli("rank --n 7 --r 3");
  CHECK(report.exit_code == 0);
  auto doc = nlohmann::json::parse(report.output);
  CHECK(doc["rank"] == "1768");
  CHECK(doc["n"] == 7);

  RunResult tiny = run_cli("rank --n 1 --r 1");
  CHECK(tiny.exit_code == 0);
  CHECK(nlohmann::json::parse(tiny.output)["claimed_range"] == false);

  CHECK(run_cli("rank --n 3 --r 9").exit_code == 2);
  CHECK(run_cli("rank --n 3").exit_code == 2);  // missing required option
}

TEST_CASE("verify subcommand") {
  RunResult pass = run_cli("verify --n 2 --depth exhaustive");
  CHECK(pass.exit_code == 0);
  CHECK(pass.output.find("all checks passed") != std::string::npos);

  RunResult as_json = run_cli("verify --n 2 --depth formula --json");
  CHECK(as_json.exit_code == 0);
  CHECK(nlohmann::json::parse(as_json.output)["all_passed"] == true);

  RunResult starved = run_cli("verify --n 3 --depth closure --budget 100");
  CHECK(starved.exit_code == 3);
  CHECK(starved.output.find("INCONCLUSIVE") != std::string::npos);

  CHECK(run_cli("verify --n 5 --depth exhaustive").exit_code == 2);
  CHECK(run_cli("verify --n 2 --depth deep").exit_code == 2);
}

TEST_CASE("enumerate subcommand") {
  RunResult all = run_cli("enumerate --n 2");
  CHECK(all.exit_code == 0);
  CHECK(nlohmann::json::parse(last_line(all.output))["count"] == 12);

  RunResult perms = run_cli("enumerate --n 3 --r 3");
  CHECK(perms.exit_code == 0);
  CHECK(nlohmann::json::parse(last_line(perms.output))["count"] == 6);

  RunResult ideal = run_cli("enumerate --n 3 --r 2 --ideal");
  CHECK(nlohmann::json::parse(last_line(ideal.output))["count"] == 122);

  RunResult to_file = run_cli("enumerate --n 2 --r 1 --out /tmp/difun_enum.json");
  CHECK(to_file.exit_code == 0);
  std::ifstream in("/tmp/difun_enum.json");
  REQUIRE(in.good());
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  CHECK(nlohmann::json::parse(last_line(contents))["count"] == 9);

  CHECK(run_cli("enumerate --n 6").exit_code == 3);  // size cap
  CHECK(run_cli("enumerate --n 3 --r 7").exit_code == 2);
}

TEST_CASE("closure subcommand") {
  {
    std::ofstream gens("/tmp/difun_cli_gens.json");
    gens << R"([{"n":2,"blocks":[[[1,2],[1]]]},{"n":2,"blocks":[[[1],[1,2]]]}])";
  }
  RunResult closed = run_cli("closure --gens /tmp/difun_cli_gens.json");
  CHECK(closed.exit_code == 0);
  auto trailer = nlohmann::json::parse(last_line(closed.output));
  CHECK(trailer["count"] == 5);
  CHECK(trailer["exhausted"] == true);

  RunResult starved =
      run_cli("closure --gens /tmp/difun_cli_gens.json --budget 2");
  CHECK(starved.exit_code == 3);

  CHECK(run_cli("closure --gens /tmp/no_such_file.json").exit_code == 2);

  {
    std::ofstream gens("/tmp/difun_cli_bad.json");
    gens << "this is not json";
  }
  CHECK(run_cli("closure --gens /tmp/difun_cli_bad.json").exit_code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("tables --bogus").exit_code == 2);
  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("tables") != std::string::npos);
}
