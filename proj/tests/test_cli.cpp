#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "amzv/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = amzv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  return lines;
}

// Timings are the only run-dependent part of any output.
std::string mask_timings(const std::string& s) { return std::regex_replace(s, std::regex(R"(\(\d+ ms\))"), "(T ms)"); }

fs::path cli_dir() { return fs::path(AMZV_GOLDEN_DIR) / "cli"; }

std::vector<std::string> case_names() {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(cli_dir()))
    if (entry.path().extension() == ".args") names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

class GoldenCli : public ::testing::TestWithParam<std::string> {};

TEST_P(GoldenCli, MatchesRecordedOutput) {
  const fs::path base = cli_dir() / GetParam();
  const auto args = read_lines(fs::path(base).replace_extension(".args"));
  const int expected_code = std::stoi(slurp(fs::path(base).replace_extension(".code")));
  const RunResult r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  if (expected_code == 0) {
    EXPECT_EQ(mask_timings(r.out), slurp(fs::path(base).replace_extension(".out")));
  } else {
    EXPECT_FALSE(r.err.empty());
  }
}

INSTANTIATE_TEST_SUITE_P(Cases, GoldenCli, ::testing::ValuesIn(case_names()),
                         [](const ::testing::TestParamInfo<std::string>& info) { return info.param; });

// Splits a console line into arguments, honouring double quotes.
std::vector<std::string> split_command(const std::string& line) {
  std::vector<std::string> args;
  std::string cur;
  bool quoted = false, have = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      have = true;
    } else if (c == ' ' && !quoted) {
      if (have) args.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += c;
      have = true;
    }
  }
  if (have) args.push_back(cur);
  return args;
}

TEST(Cli, ReadmeExamplesReproduce) {
  std::istringstream readme(slurp(AMZV_README));
  std::vector<std::string> lines;
  for (std::string line; std::getline(readme, line);) lines.push_back(line);
  int examples = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].rfind("$ amzv ", 0) != 0) continue;
    std::string expected;
    std::size_t j = i + 1;
    for (; j < lines.size() && lines[j].rfind("$ ", 0) != 0 && lines[j].rfind("```", 0) != 0; ++j) expected += lines[j] + "\n";
    const RunResult r = run(split_command(lines[i].substr(7)));
    EXPECT_EQ(r.code, 0) << lines[i];
    EXPECT_EQ(mask_timings(r.out), mask_timings(expected)) << lines[i];
    ++examples;
    i = j - 1;
  }
  EXPECT_GE(examples, 10);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args = {"verify", "--q", "3", "--suite", "zeta", "--trials", "5", "--format", "machine"};
  const RunResult a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  // Drop the trailing timing column before comparing.
  auto strip = [](const std::string& s) { return std::regex_replace(s, std::regex(R"(\t\d+\n)"), "\n"); };
  EXPECT_EQ(strip(a.out), strip(b.out));
  EXPECT_EQ(run({"zeta", "--q", "3", "--prec", "10", "x[1,1]x[2,0]"}).out, run({"zeta", "--q", "3", "--prec", "10", "x[1,1]x[2,0]"}).out);
}

TEST(Cli, EnvironmentSuppliesDefaultField) {
  ::setenv("AMZV_Q", "3", 1);
  const RunResult from_env = run({"shuffle", "x[1,1]", "x[1,1]"});
  ::unsetenv("AMZV_Q");
  EXPECT_EQ(from_env.code, 0);
  EXPECT_EQ(from_env.out, "x[2,0] + g^1*x[1,1]x[1,1]\n");
  EXPECT_EQ(run({"shuffle", "x[1,1]", "x[1,1]"}).code, amzv::cli::kUsageError);
}

TEST(Cli, FieldFlagsAgree) {
  const RunResult by_q = run({"shuffle", "--q", "4", "x[1,1]", "x[2,2]"});
  const RunResult by_pk = run({"shuffle", "--p", "2", "--k", "2", "x[1,1]", "x[2,2]"});
  const RunResult by_modulus = run({"shuffle", "--p", "2", "--k", "2", "--modulus", "1,1,1", "x[1,1]", "x[2,2]"});
  ASSERT_EQ(by_q.code, 0);
  EXPECT_EQ(by_q.out, by_pk.out);
  EXPECT_EQ(by_q.out, by_modulus.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"shuffle", "--q", "3", "x[1,0]"}).code, amzv::cli::kUsageError);
  EXPECT_EQ(run({"zeta", "--q", "3", "--prec", "-1", "x[1,0]"}).code, amzv::cli::kUsageError);
  EXPECT_EQ(run({"verify", "--q", "3", "--suite", "nope"}).code, amzv::cli::kUsageError);
  EXPECT_EQ(run({"shuffle", "--q", "3", "--format", "xml", "x[1,0]", "x[1,0]"}).code, amzv::cli::kUsageError);
  EXPECT_EQ(run({"shuffle", "--p", "2", "--k", "2", "--modulus", "1,0,1", "x[1,0]", "x[1,0]"}).code, amzv::cli::kUsageError);
}

}  // namespace
