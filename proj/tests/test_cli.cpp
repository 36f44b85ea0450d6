#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "uavvlc/config.hpp"

namespace {

namespace fs = std::filesystem;
using namespace uavvlc;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "uavvlc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("uavvlc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_);
    config_ = root_ / "small.json";
    std::ofstream(config_) << R"({
  "scenario": {"label": "small", "uav_count": 3, "grid_per_side": 6},
  "algorithm": {"population": 10, "iterations": 4}
})";
  }
  void TearDown() override { fs::remove_all(root_); }

  fs::path root_;
  fs::path config_;
};

TEST_F(CliTest, WritesDeclaredLayout) {
  const auto r = invoke({"--config", config_.string(), "--seeds", "1..2", "--out",
                         (root_ / "out").string(), "--emit", "csv", "--emit", "json", "--emit",
                         "svg"});
  ASSERT_EQ(r.code, 0) << r.err;
  const fs::path base = root_ / "out" / "small";
  for (const char* algo : {"moead", "moead-cicm", "random", "uniform"}) {
    for (const char* seed : {"1", "2"}) {
      for (const char* f : {"archive.json", "metrics.csv", "powergrid.csv", "report.csv",
                            "powergrid.svg", "front.svg"}) {
        EXPECT_TRUE(fs::exists(base / algo / seed / f)) << algo << "/" << seed << "/" << f;
      }
    }
  }
  EXPECT_TRUE(fs::exists(base / "moead-cicm" / "1" / "init_population.json"));
  EXPECT_TRUE(fs::exists(base / "summary.csv"));
  EXPECT_TRUE(fs::exists(base / "run.log"));
  EXPECT_FALSE(fs::exists(base / "moead" / "1.partial"));
}

TEST_F(CliTest, SavedConfigRoundTrips) {
  const auto r = invoke({"--config", config_.string(), "--algo", "uniform", "--seed", "3", "--out",
                         (root_ / "out").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const RunConfig saved = parse_config(root_ / "out" / "small" / "config.json");
  EXPECT_EQ(parse_config_text(serialize_config(saved)), saved);
  EXPECT_EQ(saved.run.seeds, std::vector<std::uint64_t>{3});
  EXPECT_EQ(saved.algorithm.names, std::vector<Algorithm>{Algorithm::Uniform});
}

TEST_F(CliTest, RerunIsByteIdentical) {
  const std::vector<std::string> args{"--config", config_.string(), "--algo", "moead-cicm",
                                      "--seed",   "5",              "--out",  (root_ / "out").string()};
  ASSERT_EQ(invoke(args).code, 0);
  const fs::path run = root_ / "out" / "small" / "moead-cicm" / "5";
  const std::string archive = slurp(run / "archive.json");
  const std::string grid = slurp(run / "powergrid.csv");
  ASSERT_EQ(invoke(args).code, 0);
  EXPECT_EQ(slurp(run / "archive.json"), archive);
  EXPECT_EQ(slurp(run / "powergrid.csv"), grid);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(invoke({"--bogus"}).code, cli::kExitConfigError);
  EXPECT_EQ(invoke({}).code, cli::kExitConfigError);
  EXPECT_EQ(invoke({"--config", (root_ / "missing.json").string()}).code, cli::kExitConfigError);
  EXPECT_EQ(invoke({"--config", config_.string(), "--algo", "pso"}).code, cli::kExitConfigError);
  EXPECT_EQ(invoke({"--config", config_.string(), "--seeds", "5..2"}).code, cli::kExitConfigError);
  EXPECT_EQ(invoke({"--config", config_.string(), "--case", "3"}).code, cli::kExitConfigError);
  std::ofstream(root_ / "bad.json") << R"({"vlc": {"detector_area_m2": -1}})";
  const auto bad = invoke({"--config", (root_ / "bad.json").string()});
  EXPECT_EQ(bad.code, cli::kExitConfigError);
  EXPECT_NE(bad.err.find("detector_area"), std::string::npos);
}

TEST_F(CliTest, OutputRootFromEnvironment) {
  ::setenv(cli::kOutputRootEnv, (root_ / "env").string().c_str(), 1);
  const auto r = invoke({"--config", config_.string(), "--algo", "uniform"});
  ::unsetenv(cli::kOutputRootEnv);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(root_ / "env" / "small" / "uniform" / "1" / "report.csv"));
}

TEST_F(CliTest, UnwritableOutputIsRuntimeError) {
  std::ofstream(root_ / "file") << "x";
  const auto r = invoke({"--config", config_.string(), "--algo", "uniform", "--out",
                         (root_ / "file").string()});
  EXPECT_EQ(r.code, cli::kExitRuntimeError);
}

} // namespace
