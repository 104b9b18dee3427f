#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + SIGNRMT_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, CensusTable) {
  const auto r = run("census --k 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "31"));
  EXPECT_FALSE(has(r.out, "false"));
  EXPECT_TRUE(has(run("census --k 5").out, "288"));
}

TEST(Cli, CensusJson) {
  const auto r = run("census --k 1 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["totals"]["0"], "1");
  EXPECT_TRUE(j["all_match"].get<bool>());
  EXPECT_EQ(j["double_factorial"], "1");
}

TEST(Cli, CensusCsvHeader) {
  const auto r = run("census --k 3 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "m,count,closed_form,match");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("census --k 11").code, 2);
  EXPECT_EQ(run("census --k 4", "SIGNRMT_ENUM_CAP=3").code, 2);
  EXPECT_EQ(run("census").code, 2);
  EXPECT_EQ(run("census --k 2 --bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("simulate --kind highly-palindromic --n 2 --N 6 --samples 2").code, 2);
  EXPECT_EQ(run("simulate --p 0.2").code, 2);
  EXPECT_EQ(run("verify nonsense").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, CrossingStatsIsDeterministic) {
  const auto a = run("crossing-stats --k-min 2 --k-max 6 --trials 2000 --seed 5 --format csv");
  const auto b = run("crossing-stats --k-min 2 --k-max 6 --trials 2000 --seed 5 --format csv --workers 1");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("crossing-stats --k-min 2 --k-max 6 --trials 2000 --seed 6 --format csv").out);
  EXPECT_TRUE(has(a.out, "16/5"));
}

TEST(Cli, CrossingStatsJson) {
  const auto r = run("crossing-stats --k 3 --trials 1000 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["all_match"].get<bool>());
  EXPECT_EQ(j["rows"][0]["exact"]["mean_exact"], "16/5");
  EXPECT_TRUE(j["rows"][0]["enumerated_match"].get<bool>());
  EXPECT_EQ(j["rows"][0]["monte_carlo"]["trials"], 1000);
}

TEST(Cli, SimulateWithTheory) {
  const auto r = run("simulate --kind palindromic --N 64 --p 0.5 --samples 4 --k-max 4 --bins 10 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["moments"]["moments"][4]["theory"], 2.0);
  EXPECT_EQ(j["histogram"]["counts"].size(), 10u);

  const auto hp = run("simulate --kind highly-palindromic --n 1 --N 64 --p 0.75 --samples 2 --k-max 4");
  EXPECT_EQ(hp.code, 0);
  EXPECT_TRUE(has(hp.out, "unsupported"));
}

TEST(Cli, SimulateWritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "signrmt_cli_test";
  std::filesystem::create_directories(dir);
  const auto moments = dir / "moments.csv";
  const auto hist = dir / "hist.csv";
  const auto r = run("simulate --N 32 --samples 3 --k-max 2 --format csv --out " + moments.string() +
                     " --histogram-out " + hist.string());
  EXPECT_EQ(r.code, 0);
  std::ifstream m(moments), h(hist);
  std::string line;
  std::getline(m, line);
  EXPECT_EQ(line, "k,mean,std_error,theory,theory_ci");
  std::getline(h, line);
  EXPECT_EQ(line, "lo,hi,count,density");
  std::filesystem::remove_all(dir);
}

TEST(Cli, Theory) {
  const auto r = run("theory --kind palindromic --k 2 --p 0.75 --brute-force-N 4 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], 2.0625);
  EXPECT_EQ(j["finite_N"]["value"], 3.6953125);
  const auto t = nlohmann::json::parse(run("theory --kind toeplitz --k 2 --p 1 --mc-samples 20000 --format json").out);
  EXPECT_TRUE(t["ci"].is_number());
}

TEST(Cli, VerifySuites) {
  const auto comb = run("verify combinatorics");
  EXPECT_EQ(comb.code, 0);
  EXPECT_TRUE(has(comb.out, "[PASS] 1"));
  const auto cs = run("verify crossing-stats --format json");
  EXPECT_EQ(cs.code, 0);
  EXPECT_TRUE(has(cs.out, "p_a=1/3"));
  const auto sp = run("verify spectra --quick");
  EXPECT_EQ(sp.code, 0);
  EXPECT_TRUE(has(sp.out, "trace identity"));
  EXPECT_TRUE(has(sp.out, "[SKIP] 7"));
}
