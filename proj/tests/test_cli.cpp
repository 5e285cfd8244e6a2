#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tailbound/cli.hpp"

namespace {

struct Outcome {
  int rc;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int rc = tailbound::cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST(Cli, BoundText) {
  const Outcome r = run({"bound", "binom", "--mu", "1", "--l", "0"});
  EXPECT_EQ(r.rc, 0);
  EXPECT_NE(r.out.find("1/4"), std::string::npos);
}

TEST(Cli, BoundCsv) {
  const Outcome r = run({"--format", "csv", "bound", "binom", "--mu", "2", "--l", "1", "--n", "5"});
  ASSERT_EQ(r.rc, 0);
  EXPECT_TRUE(has_line(r.out, "bound,kind,value,exact,valid,attained_at,universal_floor,reason"));
  EXPECT_TRUE(has_line(r.out, "tail,exact,0.31744,992/3125,true,,,"));
  EXPECT_TRUE(has_line(r.out, "sharp_lower,lower,0.2962962963,8/27,true,\"n=3, mu=2\",,"));
}

TEST(Cli, BoundJsonAndInvalid) {
  const Outcome r = run({"--format", "json", "bound", "binom", "--mu", "0", "--l", "0"});
  ASSERT_EQ(r.rc, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"][0]["bound"], "corollary_lower");
  EXPECT_EQ(j["rows"][0]["valid"], "false");
}

TEST(Cli, PoissonBound) {
  const Outcome r = run({"bound", "poisson", "--l", "0"});
  EXPECT_EQ(r.rc, 0);
  EXPECT_NE(r.out.find("0.6321205588"), std::string::npos);
}

TEST(Cli, FigureOneRows) {
  const Outcome r = run({"figure", "--figure", "1", "--n", "5", "--l", "0"});
  ASSERT_EQ(r.rc, 0);
  EXPECT_TRUE(has_line(r.out, "x,probability,lower_bound,probability_exact,limit"));
  EXPECT_TRUE(has_line(r.out, "2,0.66304,0.25,2072/3125,left"));
  EXPECT_TRUE(has_line(r.out, "2,0.31744,0.25,992/3125,right"));
  EXPECT_TRUE(has_line(r.out, "2.5,0.5,0.25,1/2,"));
}

TEST(Cli, FigureIsDeterministic) {
  const Outcome a = run({"figure", "--figure", "2", "--n", "6", "--l", "1"});
  const Outcome b = run({"figure", "--figure", "2", "--n", "6", "--l", "1"});
  ASSERT_EQ(a.rc, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Reflect) {
  const Outcome r = run({"--format", "json", "reflect", "--p", "0.3", "--x", "0.1"});
  ASSERT_EQ(r.rc, 0);
  const auto row = nlohmann::json::parse(r.out)["rows"][0];
  EXPECT_NEAR(row["r"].get<double>(), 0.5745962486843224885, 1e-13);
  EXPECT_LT(row["r_prime"].get<double>(), 0.0);
}

TEST(Cli, VerifyLattice) {
  const Outcome r = run({"verify", "--suite", "lattice", "--max-n", "10"});
  ASSERT_EQ(r.rc, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["suites"][0]["suite"], "lattice");
}

TEST(Cli, VerifyPoissonReportsShiftZero) {
  const Outcome r = run({"verify", "--suite", "poisson", "--max-n", "5", "--max-l", "1"});
  EXPECT_EQ(r.rc, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["passed"].get<bool>());
  for (const auto& v : j["suites"][0]["violations"]) EXPECT_EQ(v["params"]["l"], "0");
}

TEST(Cli, SweepBeta) {
  const Outcome r = run({"--format", "json", "sweep-beta", "--p", "0.3", "--a", "1", "--b", "1", "--points", "30"});
  EXPECT_EQ(r.rc, 0);
  const Outcome bad = run({"sweep-beta", "--p", "0.3", "--a", "0.5", "--b", "3"});
  EXPECT_EQ(bad.rc, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"nonsense"}).rc, 2);
  EXPECT_EQ(run({"bound", "binom", "--bogus", "1"}).rc, 2);
  EXPECT_EQ(run({"bound", "binom", "--mu", "x/y"}).rc, 2);
  EXPECT_EQ(run({"reflect", "--p", "1.5", "--x", "0.2"}).rc, 2);
  EXPECT_EQ(run({"--help"}).rc, 0);
}
