#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(LLSHOCK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(LLSHOCK_TEST_DATA) + "/" + name; }

nlohmann::json first_line(const std::string& out) { return nlohmann::json::parse(out.substr(0, out.find('\n'))); }

}  // namespace

TEST(CliDist, Values) {
  Result r = run("dist --sigma 1 --lambda 0 cdf 0.5");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(first_line(r.out)["cdf"].get<double>(), 0.846574, 1e-6);
  r = run("dist --sigma 1 --lambda 0 cdf 1.0");
  EXPECT_EQ(first_line(r.out)["cdf"].get<double>(), 1.0);
  const Result a = run("dist --sigma 1 --lambda 0 sample --n 5 --seed 7");
  const Result b = run("dist --sigma 1 --lambda 0 sample --n 5 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 5);
}

TEST(CliDist, BadArguments) {
  EXPECT_EQ(run("dist --sigma -1 --lambda 0 cdf 0.5").code, 2);
  EXPECT_EQ(run("dist --sigma 1 --lambda 0 cdf 1.5").code, 2);
  EXPECT_EQ(run("dist --sigma 1 cdf 0.5").code, 2);
  EXPECT_EQ(run("dist --sigma abc --lambda 0 cdf 0.5").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(CliMajor, ExitCodes) {
  EXPECT_EQ(run("major majorize '[3,1,1]' '[1.6666666666666667,1.6666666666666667,1.6666666666666667]'").code, 0);
  EXPECT_EQ(run("major weak-super '[2,2,1]' '[3,2,1]'").code, 0);
  EXPECT_EQ(run("major weak-super '[3,2,1]' '[2,2,1]'").code, 1);
  EXPECT_EQ(run("major weak-sub '[2,2]' '[3,2,1]'").code, 2);
  EXPECT_EQ(run("major majorize '[2,' '[3]'").code, 2);
  EXPECT_EQ(run("major row-weak '[[2,2,1],[0.4,0.4,0.1]]' '[[3,2,1],[0.5,0.4,0.2]]'").code, 0);
  EXPECT_EQ(run("major in-un '[[1,2],[2,1]]'").code, 1);
  EXPECT_EQ(run("major doubly-stochastic '[[0.5,0.5],[0.5,0.5]]'").code, 0);
  EXPECT_EQ(run("major bogus '[1]' '[1]'").code, 2);
}

TEST(CliOrder, Verdicts) {
  Result r = run("order " + data("ce3_1_x.json") + " " + data("ce3_1_x.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out)["verdict"], "Equal");
  r = run("order " + data("ce3_1_x.json") + " " + data("ce3_1_y.json"));
  EXPECT_EQ(first_line(r.out)["verdict"], "FirstDominates");
  r = run("order " + data("ce3_2a_x.json") + " " + data("ce3_2a_y.json") + " --mc 200000 --seed 3");
  ASSERT_EQ(r.code, 0);
  const auto j = first_line(r.out);
  EXPECT_EQ(j["verdict"], "Crossing");
  EXPECT_TRUE(j["monte_carlo"]["agrees"].get<bool>());
}

TEST(CliOrder, SchemaErrors) {
  for (const char* f : {"bad_lengths.json", "bad_p.json", "extra_key.json", "missing.json"}) {
    EXPECT_EQ(run("order " + data("ce3_1_x.json") + " " + data(f)).code, 2) << f;
  }
  EXPECT_EQ(run("order " + data("ce3_1_x.json") + " " + data("ce3_1_y.json") + " --grid 8").code, 2);
}

TEST(CliVerify, PassAndErrors) {
  Result r = run("verify --theorem T3_3 --h neg_log --n 100 --seed 1 --grid 512");
  ASSERT_EQ(r.code, 0);
  const auto j = first_line(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["instances_run"], 100);
  EXPECT_EQ(run("verify --theorem T3_1i --h neg_log").code, 2);
  EXPECT_EQ(run("verify --theorem T3_3 --instances 0").code, 2);
  EXPECT_EQ(run("verify --theorem T9 --h neg_log").code, 2);
  EXPECT_EQ(run("verify --theorem T3_3 --h cube").code, 2);
}

TEST(CliVerify, DeterministicAcrossJobs) {
  const Result a = run("verify --theorem T3_5i --h square --n 60 --grid 256 --jobs 1");
  const Result b = run("verify --theorem T3_5i --h square --n 60 --grid 256 --jobs 3");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

TEST(CliFigure, Csv) {
  const std::string path = ::testing::TempDir() + "ce3_1.csv";
  ASSERT_EQ(run("figure --id CE3_1 --out " + path).code, 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,diff");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_LE(std::stod(line.substr(line.find(',') + 1)), 1e-12);
  }
  EXPECT_GE(rows, 4096u);

  const Result r = run("figure --id CE3_2a --out -");
  std::istringstream csv(r.out);
  std::getline(csv, line);
  bool pos = false, neg = false;
  while (std::getline(csv, line)) {
    const double d = std::stod(line.substr(line.find(',') + 1));
    pos = pos || d > 1e-6;
    neg = neg || d < -1e-6;
  }
  EXPECT_TRUE(pos && neg);
  EXPECT_EQ(run("figure --id CE3_1 --out /nonexistent/dir/x.csv").code, 2);
  EXPECT_EQ(run("figure --id CE9 --out -").code, 2);
}

TEST(CliHelp, DocumentsSeed) {
  const Result r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0xC0FFEE"), std::string::npos);
}
