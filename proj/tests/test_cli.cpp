#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and returns its exit status and stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string(TROPMO_CLI_PATH) + " " + args + " 2>/dev/null";
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

std::string data(const std::string& name) { return std::string(TROPMO_DATA_DIR) + "/" + name; }

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("solve knapsack") {
  const auto r = run("solve " + data("knapsack.json"));
  REQUIRE(r.status == 0);
  const auto j = json_of(r);
  CHECK(j["nondominated"] == nlohmann::json::parse("[[0,3,3],[1,2,2],[3,0,0]]"));
  CHECK(j["stats"]["scalarizations"] == 10);
  CHECK(j["local_upper_bounds"] == nlohmann::json::parse(
                                       R"([[0,"inf","inf"],[1,3,"inf"],[1,"inf",3],[3,2,"inf"],[3,"inf",2],)"
                                       R"(["inf",0,"inf"],["inf","inf",0]])"));
  CHECK(j["translation"] == nlohmann::json::parse("[4,4,4]"));
}

TEST_CASE("solve knapsack without translation") {
  const auto r = run("solve --no-translate " + data("knapsack.json"));
  REQUIRE(r.status == 0);
  const auto j = json_of(r);
  CHECK(j["nondominated"] == nlohmann::json::parse("[[-4,-1,-1],[-3,-2,-2],[-1,-4,-4]]"));
  CHECK(j["translation"].is_null());
}

TEST_CASE("solve explicit files") {
  auto r = run("solve " + data("multi.json"));
  REQUIRE(r.status == 0);
  CHECK(json_of(r)["nondominated"] == nlohmann::json::parse("[[-3,2],[0,0]]"));

  r = run("solve " + data("empty.json"));
  REQUIRE(r.status == 0);
  CHECK(json_of(r)["nondominated"].empty());
  CHECK(json_of(r)["stats"]["scalarizations"] == 1);
}

TEST_CASE("output is identical across queue disciplines") {
  const auto base = run("solve " + data("random_d3.json"));
  REQUIRE(base.status == 0);
  for (const char* q : {"lifo", "random:1", "random:77"}) {
    const auto other = run("solve --queue " + std::string(q) + " " + data("random_d3.json"));
    CHECK(other.status == 0);
    CHECK(other.out == base.out);
  }
  CHECK(run("solve --queue sideways " + data("random_d3.json")).status == 2);
}

TEST_CASE("tsv format") {
  const auto r = run("solve --format tsv " + data("multi.json"));
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("nondominated\t-3\t2\nnondominated\t0\t0\n", 0) == 0);
  CHECK(r.out.find("stat\tscalarizations\t5\n") != std::string::npos);
}

TEST_CASE("verify") {
  CHECK(run("verify " + data("knapsack.json")).status == 0);
  CHECK(run("verify " + data("random_d3.json")).status == 0);
  CHECK(run("verify " + data("knapsack.json") + " --expected " + data("knapsack_expected.json")).status == 0);
  const auto bad = run("verify " + data("knapsack.json") + " --expected " + data("knapsack_expected_corrupted.json"));
  CHECK(bad.status == 1);
  CHECK(bad.out.find("MISMATCH") != std::string::npos);
  CHECK(bad.out.find("[1,2,3]") != std::string::npos);
}

TEST_CASE("dual") {
  auto r = run("dual " + data("ideal_xy_yz.json"));
  CHECK(r.status == 0);
  CHECK(json_of(r) == nlohmann::json::parse(R"([[1,"inf",1],["inf",1,"inf"]])"));
  r = run("dual " + data("ideal_x2.json"));
  CHECK(r.status == 0);
  CHECK(json_of(r) == nlohmann::json::parse("[[2]]"));
  r = run("dual " + data("ideal_unit.json"));
  CHECK(r.status == 0);
  CHECK(json_of(r) == nlohmann::json::array());
  CHECK(run("dual " + data("ideal_empty.json")).status == 2);
  CHECK(run("dual " + data("multi.json")).status == 2);
}

TEST_CASE("bound") {
  CHECK(run("bound 3 3").out == "8\n");
  CHECK(run("bound 1 1").out == "2\n");
  CHECK(run("bound 0 2").out == "2\n");
  CHECK(run("bound x 2").status == 2);
  CHECK(run("bound 1.5 2").status == 2);
}

TEST_CASE("input errors and resource cap") {
  CHECK(run("solve " + data("malformed.json")).status == 2);
  CHECK(run("solve " + data("does_not_exist.json")).status == 2);
  CHECK(run("solve " + data("ideal_x2.json")).status == 2);
  CHECK(run("verify " + data("ideal_x2.json")).status == 2);
  CHECK(run("solve --format xml " + data("multi.json")).status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("solve --max-iter 3 " + data("knapsack.json")).status == 3);
  CHECK(run("solve --max-iter 10 " + data("knapsack.json")).status == 0);
}
