#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" CHOWKIT_CLI_PATH "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify succeeds and emits the schema") {
    const Run r = run("verify --n 8");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema") == "chowkit/1");
    CHECK(j.at("command") == "verify");
    CHECK(j.at("passed") == true);
  }

  TEST_CASE("ranges produce a results array") {
    const Run r = run("compute-y --n-range 6..8");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("results").size() == 3);
    CHECK(j.at("results")[2].at("n") == 8);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run("verify --n 5").status == 2);
    CHECK(run("verify --n 8 --primes 4").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("verify").status == 2);
    CHECK(run("compute-y --n 8 --format yaml").status == 2);
    CHECK(run("compute-y --n-range 9..7").status == 2);
    CHECK(run("compute-y --n 80").status == 2);
  }

  TEST_CASE("the size ceiling follows CHOWKIT_MAX_N") {
    CHECK(run("compute-y --n 9", "CHOWKIT_MAX_N=8").status == 2);
    CHECK(run("compute-y --n 8", "CHOWKIT_MAX_N=8").status == 0);
  }

  TEST_CASE("markdown output") {
    const Run r = run("compute-x --n 11 --format markdown");
    CHECK(r.status == 0);
    CHECK(r.out.find("| 16 | Z/5 | 0 | Z/5 |") != std::string::npos);
  }

  TEST_CASE("output file and byte-identical reruns") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "chowkit_cli_test_out.json";
    std::filesystem::remove(path);
    const Run r = run("compute-y --n 10 --output '" + path.string() + "'");
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream file;
    file << in.rdbuf();
    const Run again = run("compute-y --n 10");
    CHECK(again.out == file.str());
    CHECK(run("compute-y --n 10").out == again.out);
    std::filesystem::remove(path);
  }

  TEST_CASE("identities subcommand") {
    const Run r = run("identities --n 9");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("class_identities"));
    CHECK(j.at("passed") == true);
  }
}
