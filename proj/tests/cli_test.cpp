#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DDPP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(DDPP_DATA_DIR) + "/" + name; }

TEST(Cli, SolveLobe) {
  const auto r = run("solve --net " + data("lobe2.json") + " --demand " + data("demand_lobe.json"));
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "routed");
  EXPECT_EQ(doc["cost"], 7);
}

TEST(Cli, BlockedExitCode) {
  const auto r =
      run("solve --net " + data("triangle_blocked.json") + " --demand " + data("demand_ac.json"));
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "blocked");
}

TEST(Cli, PrimeRefusesRouteCostLimit) {
  const auto r = run("solve --relation prime --max-route-cost 5 --net " + data("triangle.json") +
                     " --demand " + data("demand_ac.json"));
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, BadInputExitCode) {
  EXPECT_EQ(run("solve --net /nonexistent.json --demand " + data("demand_ac.json")).code, 1);
  EXPECT_EQ(run("solve --bogus").code, 1);
}

TEST(Cli, OracleMatchesSolve) {
  const auto a = run("oracle --net " + data("triangle.json") + " --demand " + data("demand_ac.json"));
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(nlohmann::json::parse(a.out)["cost"], 7);
}

TEST(Cli, LobeBench) {
  const auto base = run("lobe-bench --m-max 4 --relation base");
  ASSERT_EQ(base.code, 0);
  std::istringstream in(base.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "m,labels_at_destination,labels_generated,wall_time");
  for (int m = 1; m <= 4; ++m) {
    ASSERT_TRUE(std::getline(in, line));
    EXPECT_EQ(line.rfind(std::to_string(m) + "," + std::to_string(1 << m) + ",", 0), 0U) << line;
  }
  const auto prime = run("lobe-bench --m-max 14 --relation prime");
  ASSERT_EQ(prime.code, 0);
  EXPECT_NE(prime.out.find("\n14,1,"), std::string::npos);
}

TEST(Cli, GeneratedNetworkRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "ddpp_cli_test";
  std::filesystem::create_directories(dir);
  const auto net = (dir / "lobe3.json").string();
  ASSERT_EQ(run("gen-net --lobe 3 --units 1 > " + net).code, 0);
  const auto r = run("solve --net " + net + " --demand " + data("demand_lobe.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["cost"], 15);
}

TEST(Cli, Simulate) {
  const auto r = run("simulate --net " + data("random10.json") + " --traffic " + data("traffic10.json"));
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["offered"], 200);
  EXPECT_EQ(doc["routed"].get<int>() + doc["blocked"].get<int>(), 200);
}

TEST(Cli, CompareCorpus) {
  const auto r = run("compare --random 500 --seed 1");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["instances"], 500);
  EXPECT_EQ(doc["mismatches"], 0);
}

}  // namespace
