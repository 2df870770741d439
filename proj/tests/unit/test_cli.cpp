#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "geoconvex/counterexample.hpp"
#include "geoconvex/functions.hpp"
#include "json.hpp"

using namespace geoconvex;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("geoconvex_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const GridFunction& g) const {
    std::ofstream os(path(name));
    write_grid(os, g);
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

GridFunction gauge_interval() { return to_grid(gauge_of(ConvexBody::cube(1)), GridSpec::symmetric(1, 32.0, 513)); }

}  // namespace

TEST_F(CliTest, VolumeAllRoutes) {
  const std::string in = write("g.grid", gauge_interval());
  const Result r = run({"vol", "--in", in});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  ASSERT_EQ(doc["reports"].size(), 3u);
  for (const auto& rep : doc["reports"]) EXPECT_NEAR(rep["value"].get<double>(), 2.0, 1e-6) << rep.dump();
  EXPECT_EQ(doc["reports"][0]["route"], "quadrature");
  const Result one = run({"vol", "--route", "levels", "--in", in});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(json::parse(one.out)["route"], "level_fubini");
}

TEST_F(CliTest, VolumeTailBoundRejectsSmallBoxes) {
  const std::string in = write("s.grid", to_grid(gauge_of(ConvexBody::cube(1)), GridSpec::symmetric(1, 2.0, 33)));
  const Result r = run({"vol", "--route", "quad", "--in", in});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Divergent"), std::string::npos) << r.err;
  const Result ok = run({"vol", "--route", "quad", "--tail", "exact", "--in", in});
  EXPECT_EQ(ok.code, 0);
}

TEST_F(CliTest, TransformWritesGridAndRefusesOverwrite) {
  const std::string in = write("g.grid", to_grid(gauge_of(ConvexBody::cube(1)), GridSpec::symmetric(1, 4.0, 33)));
  const std::string out = path("jg.grid");
  const Result r = run({"transform", "--kind", "gauge", "--in", in, "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream is(out);
  const GridFunction jg = read_grid(is);
  // J of the gauge is the indicator, plus ||.||_D from the grid box [-4, 4]
  EXPECT_DOUBLE_EQ(eval(jg, Vec{0.5}).value(), 0.125);
  EXPECT_TRUE(eval(jg, Vec{1.5}).is_infinite());
  const std::string before = slurp(out);
  const Result again = run({"transform", "--kind", "polarity", "--in", in, "--out", out});
  EXPECT_EQ(again.code, 2);
  EXPECT_NE(again.err.find("--force"), std::string::npos);
  EXPECT_EQ(slurp(out), before);
  EXPECT_EQ(run({"transform", "--kind", "polarity", "--in", in, "--out", out, "--force"}).code, 0);
  EXPECT_NE(slurp(out), before);
}

TEST_F(CliTest, InterpolationOfTwoGrids) {
  const GridSpec s = GridSpec::symmetric(1, 4.0, 33);
  const std::string f = write("f.grid", to_grid(indicator(ConvexBody::box({-1.0}, {2.0})), s));
  const std::string g = write("g.grid", to_grid(indicator(ConvexBody::box({-2.0}, {0.5})), s));
  const Result r = run({"interp", "--kind", "plus", "--lambda", "0.5", "--f", f, "--g", g, "--out", path("h.grid")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream is(path("h.grid"));
  const GridFunction h = read_grid(is);
  EXPECT_EQ(eval(h, Vec{-1.0}).value(), 0.0);
  EXPECT_TRUE(eval(h, Vec{1.0}).is_infinite());
  EXPECT_EQ(run({"interp", "--kind", "plus", "--lambda", "1.5", "--f", f, "--g", g, "--out", path("x.grid")}).code, 2);
}

TEST_F(CliTest, CounterexampleCsv) {
  const Result r = run({"counterexample", "--nmax", "3"});
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "n,R_n,r_n,ratio,ratio_minus_1_times_sqrt_8pin");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 3);
  const Result longer = run({"counterexample", "--nmax", "5", "--log-to", "1000", "--csv", path("t.csv")});
  ASSERT_EQ(longer.code, 0);
  const std::string csv = slurp(path("t.csv"));
  EXPECT_NE(csv.find("\n1000,"), std::string::npos);
  EXPECT_EQ(run({"counterexample", "--nmax", "5", "--csv", path("t.csv")}).code, 2);
  EXPECT_EQ(run({"counterexample", "--nmax", "0"}).code, 2);
}

TEST_F(CliTest, CounterexampleIsDeterministic) {
  EXPECT_EQ(run({"counterexample", "--nmax", "20"}).out, run({"counterexample", "--nmax", "20"}).out);
}

TEST_F(CliTest, VerifyPassesAndIsDeterministic) {
  const Result a = run({"verify", "--suite", "all", "--trials", "8", "--seed", "3", "--report", path("rep.json")});
  ASSERT_EQ(a.code, 0) << a.out << a.err;
  const json doc = json::parse(a.out);
  EXPECT_EQ(doc["failures"], 0);
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_TRUE(doc["summary"].contains("holder"));
  const json records = json::parse(slurp(path("rep.json")));
  EXPECT_GT(records.size(), 8u);
  const Result b = run({"verify", "--suite", "all", "--trials", "8", "--seed", "3"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, CpSearch) {
  const Result r = run({"cp-search", "--p", "inf", "--trials", "10", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["p"], "inf");
  EXPECT_GE(doc["lower_bound"].get<double>(), ratio(2) - 1e-7);
  EXPECT_EQ(run({"cp-search", "--p", "abc"}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"vol"}).code, 2);
  EXPECT_EQ(run({"vol", "--in", path("missing.grid")}).code, 2);
  EXPECT_EQ(run({"transform", "--kind", "fourier", "--in", "a", "--out", "b"}).code, 2);
  std::ofstream(path("bad.grid")) << "1 5 -1 1\n0 1 0 1 0\n";
  const Result r = run({"vol", "--in", path("bad.grid")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotInClass"), std::string::npos) << r.err;
  const Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("counterexample"), std::string::npos);
}
