#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qsi/cli.hpp"
#include "qsi/serialize.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<const char*> args) {
  args.insert(args.begin(), "qsi");
  std::ostringstream out, err;
  const int code = qsi::cli::main(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SoundnessRow) {
  const auto r = run({"soundness", "--mu", "3,1", "--p", "1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = qsi::Json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_EQ(j["rows"][0]["soundness"], "3/4");
  EXPECT_EQ(j["rows"][0]["avg_success"], "7/8");
}

TEST(Cli, IstBoundAndExact) {
  const auto r = run({"ist", "--n", "8", "--h", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = qsi::Json::parse(r.out);
  EXPECT_EQ(j["bound"], "25/28");
  EXPECT_EQ(j["exact"], "25/28");
  EXPECT_EQ(j["wreath_trace"], "25/28");
}

TEST(Cli, IstWord) {
  const auto r = run({"ist", "--word", "1,0,0,0,1,0,1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = qsi::Json::parse(r.out);
  EXPECT_EQ(j["accept"], "1/32");
  EXPECT_EQ(j["clicks"], 5);
}

TEST(Cli, GtestAgrees) {
  const auto r = run({"gtest", "--group", "cyclic:4", "--mu", "2,2", "--d", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = qsi::Json::parse(r.out);
  EXPECT_EQ(j["soundness"], "2/3");
  EXPECT_EQ(j["trace"], "2/3");
  EXPECT_EQ(j["agree"], true);
}

TEST(Cli, RegionAndCompareSwap) {
  const auto r = run({"region", "--mu", "3,1", "--alpha-steps", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = qsi::Json::parse(r.out);
  ASSERT_EQ(j["slices"].size(), 3u);
  EXPECT_EQ(j["slices"][1]["beta_low"], "1/8");
  EXPECT_EQ(j["slices"][1]["beta_high"], "7/8");
  const auto s = run({"compare-swap", "--n-max", "3"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto k = qsi::Json::parse(s.out);
  EXPECT_EQ(k["rows"][1]["p_perm"], "11/12");
}

TEST(Cli, VerifySuitePasses) {
  const auto r = run({"verify", "gamma", "--h-max", "3", "--m-max", "6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(qsi::Json::parse(r.out)["pass"], true);
  const auto s = run({"verify", "sdp", "--n-max", "4", "--d-max", "2"});
  EXPECT_EQ(s.code, 0) << s.err;
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* fmt : {"json", "csv", "table"}) {
    const auto a = run({"soundness", "--n", "4", "--format", fmt});
    const auto b = run({"soundness", "--n", "4", "--format", fmt});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out) << fmt;
  }
  const auto a = run({"verify", "circle", "--n-max", "6", "--jobs", "3"});
  const auto b = run({"verify", "circle", "--n-max", "6", "--jobs", "1"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CsvHasHeader) {
  const auto r = run({"soundness", "--mu", "2,2", "--p", "1/2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,d,mu,p,completeness,soundness,avg,avg_approx,chosen_test");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, qsi::cli::kUsage);
  EXPECT_EQ(run({"soundness", "--mu", "3,1", "--p", "0.5"}).code, qsi::cli::kUsage);
  EXPECT_EQ(run({"soundness", "--mu", "4"}).code, qsi::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, qsi::cli::kUsage);
  EXPECT_EQ(run({"region", "--mu", "3,1", "--alpha-steps", "0"}).code, qsi::cli::kUsage);
  const auto b = run({"ist", "--n", "32", "--h", "1"});
  EXPECT_EQ(b.code, qsi::cli::kBudget);
  EXPECT_NE(b.err.find("budget exceeded"), std::string::npos);
  EXPECT_EQ(run({"gtest", "--group", "cyclic:12", "--mu", "6,6", "--dim-budget", "64"}).code, qsi::cli::kOk);
}

TEST(Cli, RunWithConfig) {
  qsi::cli::RunConfig c;
  c.command = qsi::cli::Command::compare_swap;
  c.pairs_max = 2;
  c.format = qsi::cli::Format::table;
  std::ostringstream out, err;
  EXPECT_EQ(qsi::cli::run(c, out, err), 0);
  EXPECT_NE(out.str().find("7/8"), std::string::npos);
}
