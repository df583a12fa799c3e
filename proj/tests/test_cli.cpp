// Runs the installed-style binary and checks the exit-code contract.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef BIDISK_LAB_PATH
#error "BIDISK_LAB_PATH must point at the bidisk-lab binary"
#endif

namespace {

int run(const std::string& args, const std::string& out = "/dev/null") {
  const std::string cmd = std::string(BIDISK_LAB_PATH) + " " + args + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp(const std::string& name) {
  return testing::TempDir() + "/bidisk_cli_" + name;
}

}  // namespace

TEST(Cli, AnalyzeSucceeds) {
  const std::string out = temp("analyze.json");
  EXPECT_EQ(run("analyze --k 1 --l 1", out), 0);
  const std::string text = slurp(out);
  EXPECT_NE(text.find("\"minimal_count\": 2"), std::string::npos);
  EXPECT_NE(text.find("\"dim_predicted\": 2"), std::string::npos);
  EXPECT_NE(text.find("\"abelian\": true"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("analyze --k 0 --l 1"), 2);
  EXPECT_EQ(run("analyze --k x"), 2);
  EXPECT_EQ(run("verify --safe-grade 1 --max-grade 4"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("analyze --format yaml"), 2);
  EXPECT_EQ(run("verify --inject-fault gremlin"), 2);
}

TEST(Cli, CorruptedAdjointExitsOne) {
  const std::string out = temp("fault.json");
  EXPECT_EQ(run("verify --k 1 --l 1 --trials 2 --inject-fault adjoint", out), 1);
  EXPECT_NE(slurp(out).find("adjoint_identity"), std::string::npos);
}

TEST(Cli, VerifyIsByteIdentical) {
  const std::string a = temp("a.json");
  const std::string b = temp("b.json");
  EXPECT_EQ(run("verify --k 2 --l 2 --trials 5 --seed 7", a), 0);
  EXPECT_EQ(run("verify --k 2 --l 2 --trials 5 --seed 7", b), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(Cli, OutputFlagAndTextFormat) {
  const std::string out = temp("classes.txt");
  EXPECT_EQ(run("classes --k 1 --l 1 --max-grade 6 --format text --output " + out), 0);
  const std::string text = slurp(out);
  EXPECT_NE(text.find("schema: 1"), std::string::npos);
  EXPECT_NE(text.find("lambda: 1/1"), std::string::npos);
}
