#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "hourglass/json_io.hpp"

using namespace hourglass;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + HOURGLASS_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string("\"") + HOURGLASS_TEST_DATA + "/" + name + "\""; }

std::string scratch(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "hourglass_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return "\"" + path.string() + "\"";
}

}  // namespace

TEST_CASE("fraser map then trips") {
  const auto g = run("fraser map --in " + data("example_tableau.json"));
  REQUIRE(g.status == 0);
  const auto gpath = scratch("example_graph.json", g.out);
  const auto t = run("graph trips --in " + gpath);
  REQUIRE(t.status == 0);
  const auto j = parse_json(t.out);
  CHECK(j.at("trips").size() == 6);
  CHECK(j.at("trips")[3][0] == 8);

  const auto v = run("graph validate --in " + gpath);
  CHECK(v.status == 0);
  CHECK(run("graph fully-reduced --in " + gpath).status == 0);

  // A square move keeps the trip permutations.
  const auto moved = run("move square --in " + gpath + " --face 0");
  REQUIRE(moved.status == 0);
  const auto t2 = run("graph trips --in " + scratch("moved.json", moved.out));
  CHECK(parse_json(t2.out).at("trips") == j.at("trips"));
  CHECK(run("move square --in " + gpath + " --face 99").status == 2);
}

TEST_CASE("promotion permutation on the command line") {
  const auto r = run("tableau prom --in " + data("example_tableau.json") + " --i 4");
  REQUIRE(r.status == 0);
  CHECK(parse_json(r.out).at("prom")[0] == 8);
}

TEST_CASE("input errors exit with status 2") {
  const auto r = run("graph validate --in " + data("truncated.json"));
  CHECK(r.status == 2);
  CHECK(run("graph validate --in /nonexistent.json").status == 2);
  CHECK(run("csp --rows 0 --cols 2").status == 2);
  CHECK(run("no-such-command").status == 2);
}

TEST_CASE("tamari summary") {
  const auto r = run("explore tamari --r 5");
  REQUIRE(r.status == 0);
  const auto j = parse_json(r.out);
  CHECK(j.at("summary") == "5 class members, flip graph C5");
  CHECK(j.at("bijection") == true);
}

TEST_CASE("cyclic sieving command") {
  const auto r = run("csp --rows 3 --cols 2");
  REQUIRE(r.status == 0);
  const auto j = parse_json(r.out);
  CHECK(j.at("ok") == true);
  CHECK(j.at("f") == "1 + q^2 + q^3 + q^4 + q^6");
}
