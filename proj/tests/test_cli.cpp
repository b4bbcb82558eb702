#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "weylquant/io.hpp"

using weylquant::io::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(WEYLQUANT_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(WEYLQUANT_TEST_DATA) + "/" + name; }

std::size_t occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, BranchRunningExample) {
  const Outcome r = run("branch --type A2 --k-roots '[[4,-2]]' --lambda 0,6");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["regular"].get<bool>());
  ASSERT_EQ(j["branching"].size(), 4u);
  for (const auto& row : j["branching"]) EXPECT_EQ(row["multiplicity"], 1);
  EXPECT_EQ(j["branching"][0]["lambda"], json({0, 6}));
}

TEST(Cli, BranchRegularAddsKostantColumn) {
  const Outcome r = run("branch --type A2 --lambda 2,2");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["regular"].get<bool>());
  std::int64_t total = 0;
  for (const auto& row : j["branching"]) {
    EXPECT_EQ(row["kostant"], row["multiplicity"]);
    total += row["multiplicity"].get<std::int64_t>();
  }
  EXPECT_EQ(total, 8);
}

TEST(Cli, BranchCsv) {
  const Outcome r = run("branch --type A2 --k-roots '[[4,-2]]' --lambda 0,6 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lambda,multiplicity\n0 6,1\n2 2,1\n4 -2,1\n6 -6,1\n");
}

TEST(Cli, CharacterMatchesGolden) {
  const Outcome r = run("character --input " + data("su3_example.json"));
  ASSERT_EQ(r.code, 0);
  std::FILE* f = std::fopen(data("su3_report.json").c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::string golden;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) golden.append(buf.data(), n);
  std::fclose(f);
  EXPECT_EQ(json::parse(r.out), json::parse(golden));
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "spectrum --input " + data("su3_example.json") + " --gp";
  const Outcome a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Outcome c = run("verify --input " + data("cp1.json"));
  const Outcome d = run("verify --input " + data("cp1.json"));
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, MultiplicityAndSpectrum) {
  const Outcome m = run("multiplicity --input " + data("su3_example.json") + " --lambda 2,2");
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(json::parse(m.out)["multiplicity"], 1);

  const Outcome s = run("spectrum --input " + data("cp1.json") + " --window -4:4 --format csv");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(s.out, "lambda,multiplicity\n-4,1\n0,1\n4,1\n");
}

TEST(Cli, GkrsCosets) {
  const Outcome r = run("gkrs --type A2 --k-roots '[[4,-2]]' --lambda 0,0");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("multiplet"), std::string::npos);
}

TEST(Cli, DiagramCirclesFourWeights) {
  const Outcome r = run("diagram --type A2 --k-roots '[[4,-2]]' --lambda 0,6");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  EXPECT_EQ(occurrences(r.out, "class=\"multiplicity\""), 4u);
}

TEST(Cli, DiagramNeedsRankTwo) {
  EXPECT_EQ(run("diagram --type A3 --lambda 2,0,2").code, 2);
  EXPECT_EQ(run("diagram --input " + data("cp1.json")).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("character --input " + data("truncated.json")).code, 2);
  EXPECT_EQ(run("character --input " + data("flipped.json")).code, 3);
  EXPECT_EQ(run("verify --input " + data("flipped.json")).code, 3);
  EXPECT_EQ(run("branch --type A2 --lambda -2,4").code, 2);
  EXPECT_EQ(run("branch --type E9 --lambda 0,0").code, 2);
  EXPECT_EQ(run("branch --type A2 --lambda 0,6 --format svg").code, 2);
  EXPECT_EQ(run("spectrum --input " + data("su3_example.json") + " --window nonsense").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("").code, 2);
}
