#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "anisogate/cli.hpp"

namespace fs = std::filesystem;
using anisogate::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const char* dir = std::getenv("ANISOGATE_CLI_SCRATCH");
  fs::path p = dir ? fs::path(dir) : fs::temp_directory_path() / "anisogate_cli_scratch";
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, GateTableAndJson) {
  const Result t = invoke({"gate", "--lambda", "3.141592653589793"});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_FALSE(t.out.empty());
  const Result j = invoke({"--format", "json", "gate", "--lambda", "1", "--beta", "0.1"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_NO_THROW((void)json::parse(j.out));
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(invoke({"gate", "--bogus", "1"}).code, 2);
  EXPECT_EQ(invoke({"--format", "xml", "gate"}).code, 2);
  EXPECT_EQ(invoke({"compile", "cnot", "--procedure", "3", "--s", "0.1"}).code, 2);
  EXPECT_EQ(invoke({"sweep", "theta-m", "--values", ""}).code, 2);
  EXPECT_EQ(invoke({"verify", (scratch() / "does_not_exist.json").string()}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, DegenerateWedgeIsSynthesisFailure) {
  EXPECT_EQ(invoke({"compile", "x-rot", "--angle", "1", "--theta-m", "0"}).code, 3);
  EXPECT_EQ(invoke({"compile", "cnot", "--s", "0"}).code, 3);
}

TEST(Cli, CompileVerifySimulate) {
  const fs::path prog = scratch() / "cnot_p1.json";
  const Result c = invoke({"compile", "cnot", "--procedure", "1", "--s", "0.1", "--out", prog.string()});
  ASSERT_EQ(c.code, 0) << c.err;
  const json rec = json::parse(slurp(prog));
  EXPECT_EQ(rec.at("format"), "anisogate.program.v1");
  EXPECT_EQ(rec.at("kind"), "cnot");

  const Result v = invoke({"--format", "json", "verify", prog.string()});
  ASSERT_EQ(v.code, 0) << v.err;
  const json report = json::parse(v.out);
  EXPECT_TRUE(report.at("equivalence").at("cnotClass").get<bool>());
  EXPECT_GT(report.at("circuit").at("fidelityToCnot").get<double>(), 1 - 1e-9);

  const Result s = invoke({"--format", "json", "simulate", prog.string(), "--init", "11"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_FALSE(s.out.empty());
}

TEST(Cli, PulseOffMiddlePairIsContractViolation) {
  const fs::path prog = scratch() / "bad_core.json";
  std::ofstream(prog) << R"({"format": "anisogate.program.v1", "kind": "cnot",
    "pulses": [{"pair": "1-2", "lambda": 3.14159, "alpha": 0, "beta": 0, "gamma": 0}]})";
  EXPECT_EQ(invoke({"verify", prog.string()}).code, 4);
}

TEST(Cli, UnknownProgramKeyIsConfigError) {
  const fs::path prog = scratch() / "extra_key.json";
  std::ofstream(prog) << R"({"format": "anisogate.program.v1", "kind": "cnot", "pulses": [], "extra": 1})";
  EXPECT_EQ(invoke({"verify", prog.string()}).code, 2);
}

TEST(Cli, ConfigFileWithExplicitFlagWinning) {
  const fs::path cfg = scratch() / "cfg.json";
  std::ofstream(cfg) << R"({"s": 0.2, "procedure": 1})";
  const Result a = invoke({"--format", "json", "--config", cfg.string(), "compile", "cnot"});
  ASSERT_EQ(a.code, 0) << a.err;
  const Result b = invoke({"--format", "json", "--config", cfg.string(), "compile", "cnot", "--s", "0.05"});
  ASSERT_EQ(b.code, 0) << b.err;
  const Result direct = invoke({"--format", "json", "compile", "cnot", "--s", "0.05", "--procedure", "1"});
  EXPECT_EQ(b.out, direct.out);
  EXPECT_NE(a.out, b.out);
}

TEST(Cli, SeedFromEnvironment) {
  const fs::path prog = scratch() / "seed_prog.json";
  ASSERT_EQ(invoke({"compile", "cnot", "--s", "0.1", "--out", prog.string()}).code, 0);
  ::setenv("ANISOGATE_SEED", "not-a-number", 1);
  EXPECT_EQ(invoke({"verify", prog.string()}).code, 2);
  EXPECT_EQ(invoke({"--seed", "5", "verify", prog.string()}).code, 0);  // flag wins
  ::setenv("ANISOGATE_SEED", "7", 1);
  const Result env = invoke({"--format", "json", "verify", prog.string()});
  ::unsetenv("ANISOGATE_SEED");
  const Result flag = invoke({"--format", "json", "--seed", "7", "verify", prog.string()});
  EXPECT_EQ(env.code, 0);
  EXPECT_EQ(env.out, flag.out);
}

TEST(Cli, SweepsAreDeterministicAcrossThreadCounts) {
  const fs::path a = scratch() / "sweep_a.csv", b = scratch() / "sweep_b.csv";
  ASSERT_EQ(invoke({"--format", "csv", "sweep", "s", "--values", "0.05,0.1,0.2", "--procedure", "both", "--threads", "1",
                    "--out", a.string()}).code, 0);
  ASSERT_EQ(invoke({"--format", "csv", "sweep", "s", "--values", "0.05,0.1,0.2", "--procedure", "both", "--threads", "4",
                    "--out", b.string()}).code, 0);
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, ThetaSweepFitsInverseScaling) {
  const Result r = invoke({"--format", "json", "sweep", "theta-m", "--values", "0.2,0.1,0.05,0.025"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.at("rows").size(), 4u);
  EXPECT_NEAR(j.at("fit").at("xrotExponent").get<double>(), 1.0, 0.1);
  EXPECT_NEAR(j.at("fit").at("cnotExponent").get<double>(), 1.0, 0.1);
}

TEST(Cli, DeltaSweepRatio) {
  const Result r = invoke({"--format", "json", "sweep", "delta", "--values", "0.02,0.01,0.005", "--theta", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rows = json::parse(r.out).at("rows");
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_NEAR(rows[i].at("ratio").get<double>(), 4.0, 0.4);
}
