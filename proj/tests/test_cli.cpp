#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef MOSVA_CLI
#error "MOSVA_CLI must name the CLI binary"
#endif

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(MOSVA_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun r;
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const CliRun& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, DimsTable) {
  const CliRun r = run("dims --max-weight 6");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["command"], "dims");
  EXPECT_TRUE(j.contains("version"));
  EXPECT_TRUE(j.contains("seed"));
  std::vector<std::string> dims;
  for (const auto& row : j["rows"]) {
    dims.push_back(row["dim_enum"]);
    EXPECT_TRUE(row["agree"].get<bool>());
  }
  EXPECT_EQ(dims, (std::vector<std::string>{"1", "0", "2", "4", "12", "32", "90"}));
}

TEST(Cli, DimsCsv) {
  const CliRun r = run("dims --max-weight 2 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "weight,dim_enum,dim_binomial,dim_2F1,agree\n0,1,1,1,true\n1,0,0,0,true\n2,2,2,2,true\n");
}

TEST(Cli, ZeroMode) {
  const CliRun r = run("zero-mode --word \"++--\"");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["nabla"], "λ^2 - 2*K*λ");
  EXPECT_EQ(j["psi"], "λ^2 - 2*K*λ");
  const auto v = parse(run("zero-mode --word \"++--\" --lambda 6 --K 1"));
  EXPECT_EQ(v["psi_value"], "24");
  EXPECT_EQ(run("zero-mode --word \"++--\" --lambda 6").code, 2);
}

TEST(Cli, Assoc) {
  const CliRun r = run("assoc --u \"+:-1,-:-1\" --v \"+:-1,-:-1\" --w \"+:-1,-:-1\" --window 6");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["p"], 4);
  EXPECT_TRUE(j["equal"].get<bool>());
}

TEST(Cli, SeededRunsAreByteIdentical) {
  const CliRun a = run("assoc --trials 3 --max-weight 2 --window 3 --seed 9");
  const CliRun b = run("assoc --trials 3 --max-weight 2 --window 3 --seed 9");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse(a)["seed"], 9);
  const CliRun c = run("oracle --word \"+-+-\" --ell 2 --points 6 --seed 4");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.out, run("oracle --word \"+-+-\" --ell 2 --points 6 --seed 4").out);
}

TEST(Cli, ModuleAuditAndProbe) {
  const auto audit = parse(run("module-audit --u \"+:-1,-:-1\" --window 4"));
  EXPECT_EQ(audit["flags"].size(), 12u);
  EXPECT_FALSE(audit["balancedSpanClosed"].get<bool>());
  EXPECT_EQ(audit["u"], "h+(-1)h-(-1)𝟙");
  const auto probe = parse(run("probe --word \"+:-1,-:-1\""));
  EXPECT_EQ(probe["probes"][0]["result"], "4*l^2");
  EXPECT_EQ(parse(run("probe --word \"+:-1,-:-1\" --l 3"))["probes"][0]["value"], "36");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("assoc --u \"+:x\" --v \"\" --w \"\"").code, 2);
  EXPECT_EQ(run("product --u \"+:1\" --v \"\"").code, 2);
  EXPECT_EQ(run("zero-mode --word \"+-+\"").code, 2);
  EXPECT_EQ(run("dims --2f1 1/2,1,2,4").code, 2);
  EXPECT_EQ(run("oracle --word \"+-\" --at 0 0.5").code, 2);
  EXPECT_EQ(run("oracle --word \"+-\" --chart torus").code, 2);
  EXPECT_EQ(run("dims --format xml").code, 2);
}

TEST(Cli, FailedCheckExitsOne) {
  // An impossible tolerance turns the numeric comparison into a failure.
  EXPECT_EQ(run("oracle --word \"+-+-\" --ell 3 --points 4 --tol 0").code, 1);
}

}  // namespace
