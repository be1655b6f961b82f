#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "loopchar/serialize.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "loopchar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = loopchar::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("base case rational") {
  const auto r = run({"rational", "--m", "0", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"num":[{"w":{"l0":0,"a1":0,"d":0},"c":"1"}],"den":[{"l0":0,"a1":-1,"d":1}]})"
                 "\n");
  CHECK(run({"rational", "--m", "1", "--n", "3", "--method", "both", "--check"}).code == 0);
  CHECK(run({"rational", "--m", "2", "--n", "4", "--method", "oracle"}).out ==
        run({"rational", "--m", "2", "--n", "4"}).out);
}

TEST_CASE("galleries of s0") {
  const auto r = run({"galleries", "--word", "s0"});
  REQUIRE(r.code == 0);
  const auto j = loopchar::Json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["word"] == "e");
  CHECK(j[1]["word"] == "s0");
  CHECK(j[1]["coset"] == 1);
}

TEST_CASE("other subcommands") {
  CHECK(run({"mult", "--level", "1", "--alpha", "1,0,0"}).out == "1\n");
  CHECK(run({"mult", "--level", "1", "--alpha", "1,0,-2"}).out == "2\n");
  CHECK(run({"weyl", "act", "--word", "s0", "--weight", "1,0,0"}).out ==
        R"({"l0":1,"a1":1,"d":-1})"
        "\n");
  CHECK(run({"--format", "text", "weyl", "act", "--word", "s0", "--weight", "1,0,0"}).out ==
        "(1,1,-1)\n");
  CHECK(run({"bwv", "--word", "s1s0", "--element", "s1"}).code == 0);
  CHECK(run({"bwv", "--word", "s1s0", "--element", "1,0"}).out ==
        run({"bwv", "--word", "s1s0", "--element", "s1"}).out);
  const auto d = loopchar::Json::parse(run({"demazure", "--word", "s0s1s0", "--level", "1"}).out);
  CHECK(d["word"] == "s0s1s0");
  CHECK(d["level"] == 1);
  CHECK(run({"character", "--word", "s0s1s0", "--level", "1", "--order", "4", "--check"}).code == 0);
  CHECK(loopchar::Json::parse(run({"limit", "--m", "0", "--order", "0"}).out).size() == 1);
  const auto v = run({"verify", "--suite", "weights"});
  CHECK(v.code == 0);
  CHECK(loopchar::Json::parse(v.out)["passed"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"rational", "--m", "1"}).code == 2);
  CHECK(run({"rational", "--m", "3", "--n", "1"}).code == 2);
  CHECK(run({"mult", "--level", "1", "--alpha", "1,0"}).code == 2);
  CHECK(run({"galleries", "--word", "s0s0"}).code == 2);
  CHECK(run({"--format", "xml", "galleries", "--word", "s0"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  // Too many galleries to enumerate: a computation error.
  std::string longword;
  for (int k = 0; k < 42; ++k) longword += k % 2 ? "s1" : "s0";
  CHECK(run({"galleries", "--word", longword}).code == 1);
}

TEST_CASE("cache hits are byte-identical") {
  const fs::path dir = fs::temp_directory_path() / "loopchar_cli_cache";
  fs::remove_all(dir);
  const std::vector<std::vector<std::string>> cmds{
      {"rational", "--m", "1", "--n", "3"},
      {"demazure", "--word", "s0s1s0", "--level", "2"},
      {"--format", "text", "character", "--word", "s1s0", "--level", "1", "--order", "3"},
      {"mult", "--level", "2", "--alpha", "2,1,-3"},
      {"limit", "--m", "2", "--order", "3"}};
  for (auto args : cmds) {
    const auto plain = run(args);
    args.insert(args.begin(), {"--cache-dir", dir.string()});
    const auto cold = run(args);
    const auto warm = run(args);
    CHECK(cold.code == 0);
    CHECK(cold.out == plain.out);
    CHECK(warm.out == cold.out);
  }
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 5);
  fs::remove_all(dir);
}

TEST_CASE("jobs flag does not change output") {
  CHECK(run({"--jobs", "1", "bwv", "--word", "s0s1s0s1s0s1", "--element", "s0"}).out ==
        run({"--jobs", "4", "bwv", "--word", "s0s1s0s1s0s1", "--element", "s0"}).out);
  CHECK(run({"--jobs", "0", "galleries", "--word", "s0"}).code == 2);
}
