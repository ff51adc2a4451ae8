#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "hfsc/cli.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "hfsc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hfsc::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hfsc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write_single_sku(const std::string& name, hfsc::Count demand) const {
    hfsc::Instance inst;
    inst.name = "single";
    inst.bed_length = 720;
    inst.bed_height = 160;
    inst.lengths = {100};
    inst.demand = {{demand}};
    hfsc::save_instance(inst, path(name));
  }

  fs::path dir_;
};

TEST_F(Cli, GenerateNamesFiles) {
  const auto r = run({"generate", "--group", "G1", "--cases", "2", "--seed", "1000000", "--out", path("gen")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("gen/G1_case01.json")));
  EXPECT_TRUE(fs::exists(path("gen/G1_case02.json")));
  EXPECT_FALSE(fs::exists(path("gen/G1_case03.json")));
  const auto inst = hfsc::load_instance(path("gen/G1_case02.json"));
  EXPECT_EQ(inst.demand, hfsc::generate_group(*hfsc::find_group("G1"), 2, 1000000)[1].demand);
}

TEST_F(Cli, SolveThenValidate) {
  write_single_sku("inst.json", 37);
  auto r = run({"solve", path("inst.json"), "--time-limit", "0", "--out", path("plan.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("k=1 mean_ur=", 0), 0U) << r.out;
  r = run({"validate", path("inst.json"), path("plan.json")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out, "valid k=1\n");
}

TEST_F(Cli, SolveWithoutOutPrintsMetrics) {
  write_single_sku("inst.json", 4);
  const auto r = run({"solve", path("inst.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("tc="), std::string::npos);
}

TEST_F(Cli, OverproducingPlanFailsValidation) {
  write_single_sku("inst.json", 4);
  hfsc::Instance inst = hfsc::load_instance(path("inst.json"));
  hfsc::save_plan(hfsc::make_plan(inst, {hfsc::Lay{{5}, {1}}}), path("plan.json"));
  const auto r = run({"validate", path("inst.json"), path("plan.json")});
  EXPECT_EQ(r.code, hfsc::cli::kValidationFailed);
  EXPECT_NE(r.out.find("exactness"), std::string::npos) << r.out;
}

TEST_F(Cli, MalformedFilesExitTwo) {
  hfsc::detail::write_file(path("bad.json"), "{ not json");
  write_single_sku("inst.json", 4);
  EXPECT_EQ(run({"solve", path("bad.json")}).code, hfsc::cli::kValidationFailed);
  EXPECT_EQ(run({"validate", path("inst.json"), path("bad.json")}).code, hfsc::cli::kValidationFailed);
}

TEST_F(Cli, InvalidInstanceExitsTwo) {
  hfsc::Instance inst;
  inst.name = "long";
  inst.bed_length = 50;
  inst.bed_height = 10;
  inst.lengths = {60};
  inst.demand = {{3}};
  hfsc::save_instance(inst, path("inst.json"));
  EXPECT_EQ(run({"solve", path("inst.json")}).code, hfsc::cli::kValidationFailed);
}

TEST_F(Cli, BadArgumentsExitOne) {
  EXPECT_EQ(run({}).code, hfsc::cli::kBadArguments);
  EXPECT_EQ(run({"frobnicate"}).code, hfsc::cli::kBadArguments);
  EXPECT_EQ(run({"solve"}).code, hfsc::cli::kBadArguments);
  EXPECT_EQ(run({"solve", path("missing.json")}).code, hfsc::cli::kBadArguments);
  EXPECT_EQ(run({"generate", "--group", "G11", "--out", path("g")}).code, hfsc::cli::kBadArguments);
  EXPECT_EQ(run({"bench", "--groups", "G1", "--cases", "0", "--out", path("b")}).code, hfsc::cli::kBadArguments);
  write_single_sku("inst.json", 4);
  EXPECT_EQ(run({"solve", path("inst.json"), "--time-limit", "-1"}).code, hfsc::cli::kBadArguments);
}

TEST_F(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST_F(Cli, RenderWritesSvg) {
  write_single_sku("inst.json", 30);
  ASSERT_EQ(run({"solve", path("inst.json"), "--out", path("plan.json")}).code, 0);
  const auto r = run({"render", path("plan.json"), path("inst.json"), "--out", path("plan.svg")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string svg = hfsc::detail::read_file(path("plan.svg"));
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("class=\"column\""), std::string::npos);
}

TEST_F(Cli, BenchWritesReports) {
  const auto r = run({"bench", "--groups", "G1", "--cases", "1", "--time-limit", "0", "--out", path("rep")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("rep/cases.csv")));
  EXPECT_TRUE(fs::exists(path("rep/cases_summary.csv")));
  EXPECT_EQ(r.out, hfsc::detail::read_file(path("rep/cases_summary.csv")));
}

TEST(CliHelpers, GroupListAndMetrics) {
  EXPECT_EQ(hfsc::cli::parse_group_list("all").size(), 10U);
  EXPECT_EQ(hfsc::cli::parse_group_list("G1,G3"), (std::vector<std::string>{"G1", "G3"}));
  EXPECT_THROW(hfsc::cli::parse_group_list("G0"), CLI::ValidationError);
  EXPECT_FALSE(hfsc::cli::config_for(0.0).time_limit.has_value());
  EXPECT_DOUBLE_EQ(*hfsc::cli::config_for(5.0).time_limit, 5.0);
}

}  // namespace
