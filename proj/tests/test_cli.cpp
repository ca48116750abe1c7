#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "hecke/json_io.hpp"

using namespace hecke;

namespace {

struct Run {
  int code;
  std::string out;
};

// stdout captured, stderr dropped
Run run(const std::string& args) {
  std::string cmd = std::string(HECKE_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string seed(const std::string& name) { return std::string("--seed ") + SEED_DIR + "/" + name + ".json"; }

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hecke_cli_test_" + name);
}

}  // namespace

TEST(Cli, LabelTables) {
  auto a = run("label A 3 2");
  ASSERT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("l=2 l'=2 l''=2 k=2"), std::string::npos);
  auto d = run("label D 4 1");
  EXPECT_NE(d.out.find("l=3 l'=1 l''=3 k=2"), std::string::npos);
  auto e = run("label --type E --rank 6 --vertex 3");
  EXPECT_NE(e.out.find("l=4 l'=2 l''=3 k=2"), std::string::npos);
  EXPECT_NE(e.out.find("3__    2"), std::string::npos);
}

TEST(Cli, OrbitCounts) {
  std::vector<std::pair<std::string, int>> cases{
      {"a3_generic", 12}, {"a3_a0", 6}, {"a3_a-2", 3}, {"d4_seven", 7}, {"d4_level1", 3}, {"d5_tableau", 10}};
  for (const auto& [name, size] : cases) {
    auto r = run("orbit " + seed(name));
    ASSERT_EQ(r.code, 0) << name;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["size"].get<int>(), size) << name;
    EXPECT_TRUE(j["admissible"].get<bool>()) << name;
    // the orbit JSON parses back to the same members
    auto lab = labelling_from_json(j);
    EXPECT_EQ(to_json(orbit_from_json(j["orbit"], lab)), j["orbit"]);
  }
  auto bad = Json::parse(run("orbit " + seed("a3_a-1")).out);
  EXPECT_FALSE(bad["admissible"].get<bool>());
  EXPECT_FALSE(bad["witness"].is_null());
  EXPECT_TRUE(Json::parse(run("orbit " + seed("d4_level1")).out)["level1"].get<bool>());
}

TEST(Cli, Deterministic) {
  for (const std::string args : {"orbit " + seed("a3_generic"), "rep " + seed("d4_seven") + " --eps -1",
                                 "render --all " + seed("d4_seven")}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, RepPassesAndWritesFile) {
  auto path = tmp("rep.json");
  auto r = run("rep " + seed("d4_seven") + " --eps 1 --out " + path.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "rep: dim 7, relations pass\n");
  std::ifstream in(path);
  auto j = Json::parse(in);
  EXPECT_TRUE(j["relations"]["ok"].get<bool>());
  EXPECT_TRUE(j["branch_relations"]["ok"].get<bool>());
  EXPECT_TRUE(j["coxeter"]["ok"].get<bool>());
  EXPECT_EQ(j["dim"].get<int>(), 7);
  // the emitted rep re-verifies cleanly
  auto again = run("rep --seed " + path.string());
  EXPECT_EQ(again.code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, CorruptedRepFails) {
  auto path = tmp("corrupt.json");
  auto j = Json::parse(run("rep " + seed("a3_generic")).out);
  // swap a diagonal entry of g_1 for 1
  auto& entries = j["g"]["1"]["entries"];
  ASSERT_FALSE(entries.empty());
  entries[0][2] = Json{{"num", Json::array({Json::array({"1", "1"})})}, {"den", Json::array()}};
  std::ofstream(path) << j.dump();
  auto r = run("rep --seed " + path.string());
  EXPECT_EQ(r.code, 30);
  auto report = Json::parse(r.out)["relations"];
  EXPECT_FALSE(report["ok"].get<bool>());
  EXPECT_GT(report["failed"].get<int>(), 0);
  std::filesystem::remove(path);
}

TEST(Cli, QuotientSeed) {
  auto j = Json::parse(run("rep " + seed("gl2_row_quotient")).out);
  EXPECT_TRUE(j["passes_to_quotient"].get<bool>());
  EXPECT_EQ(j["delta"].get<std::string>(), "1");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("classical " + seed("d4_level1")).code, 2);
  EXPECT_EQ(run("classical " + seed("d4_level1") + " --eps 3").code, 2);
  EXPECT_EQ(run("label F 3 1").code, 10);
  EXPECT_EQ(run("label D 3 1").code, 10);
  EXPECT_EQ(run("label A 3 9").code, 11);
  EXPECT_EQ(run("orbit " + seed("a3_generic") + " --max-orbit 5").code, 14);
  EXPECT_EQ(run("rep " + seed("e6_not_admissible")).code, 16);
  EXPECT_EQ(run("render " + seed("e6_not_admissible")).code, 0);
  EXPECT_EQ(run("orbit --seed /nonexistent/seed.json").code, 21);

  auto path = tmp("broken.json");
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(run("orbit --seed " + path.string()).code, 20);
  std::filesystem::remove(path);
}

TEST(Cli, ClassicalSignTwist) {
  auto plus = Json::parse(run("classical " + seed("d4_level1") + " --eps 1").out);
  auto minus = Json::parse(run("classical " + seed("d4_level1") + " --eps -1").out);
  EXPECT_TRUE(plus["coxeter"]["ok"].get<bool>());
  EXPECT_TRUE(minus["coxeter"]["ok"].get<bool>());
  for (const auto& [name, m] : plus["r"].items()) {
    auto a = qmatrix_from_json(m), b = qmatrix_from_json(minus["r"][name]);
    EXPECT_EQ(b, Rational(-1) * a) << name;
  }
}
