// Copyright 2026 The cfft11 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cfft11/cfft11.hpp"
#include "gtest/gtest.h"
#include "json.hpp"
#include "test_util.hpp"

namespace cfft11 {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cfft11");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("cfft11_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, Cosets) {
  auto r = run_cli({"cosets", "--n", "2047"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out)[0], "187 cosets: 1×size-1, 186×size-11");
  r = run_cli({"cosets", "--n", "23"});
  EXPECT_EQ(lines(r.out).size(), 4u);
  EXPECT_EQ(lines(r.out)[2], "C1: 1 2 4 8 16 9 18 13 3 6 12");
  r = run_cli({"cosets", "--n", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], 1);
  EXPECT_EQ(j["cosets"][0]["members"], nlohmann::json::array({0}));
}

TEST(Cli, Dump) {
  EXPECT_EQ(lines(run_cli({"dump", "PT5"}).out)[0], "10000");
  EXPECT_EQ(lines(run_cli({"dump", "S"}).out)[1], "11000000000");
  const auto q = lines(run_cli({"dump", "Q11"}).out);
  ASSERT_EQ(q.size(), 11u);
  for (const auto& row : q) EXPECT_EQ(row.size(), 43u);
  EXPECT_EQ(run_cli({"dump", "Pi9"}).code, cli::kExitUsage);
}

TEST(Cli, PlanRoundTrip) {
  TempDir dir;
  const auto path = dir.file("p.json");
  const auto r = run_cli({"plan", "--n", "23", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(load_plan(path), build_plan(Field::standard(), 23));
  EXPECT_EQ(run_cli({"plan", "--n", "23", "--out", "/nonexistent/dir/p.json"}).code, cli::kExitUsage);
}

TEST(Cli, Verify) {
  auto r = run_cli({"verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(lines(r.out).back(), "PASS");
  r = run_cli({"verify", "--trials", "0", "--n", "89"});
  EXPECT_EQ(r.code, 0) << r.out;
  // Same seed, same report.
  EXPECT_EQ(run_cli({"verify", "--seed", "7", "--trials", "20"}).out,
            run_cli({"verify", "--seed", "7", "--trials", "20"}).out);
}

TEST(Cli, VerifyReportsCorruptedPlan) {
  TempDir dir;
  const auto path = dir.file("bad.json");
  auto j = plan_to_json(build_plan(Field::standard(), 23));
  std::string row = j["a_matrix"][5];
  row[3] = row[3] == '0' ? '1' : '0';
  j["a_matrix"][5] = row;
  write(path, j.dump());
  const auto r = run_cli({"verify", "--in", path, "--trials", "10"});
  EXPECT_EQ(r.code, cli::kExitVerifyFailed);
  EXPECT_NE(r.out.find("first mismatching output index 5"), std::string::npos) << r.out;
}

TEST(Cli, Eval) {
  TempDir dir;
  const auto zero = dir.file("zero.hex"), vec = dir.file("v.hex"), res = dir.file("r.hex");
  std::string text;
  for (int i = 0; i < 23; ++i) text += "0x000\n";
  write(zero, text);
  auto r = run_cli({"eval", "--n", "23", "--in", zero, "--out", res});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read(res), text);

  testing::Rng rng(81);
  const auto f = rng.elements(23);
  text.clear();
  char buf[16];
  for (Element e : f) {
    std::snprintf(buf, sizeof buf, "0x%03x\n", static_cast<unsigned>(e.value()));
    text += buf;
  }
  write(vec, text);
  r = run_cli({"eval", "--n", "23", "--in", vec});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string want;
  for (Element e : oracle::naive_dft(kDefaultGenPoly, f)) {
    std::snprintf(buf, sizeof buf, "0x%03X\n", static_cast<unsigned>(e.value()));
    want += buf;
  }
  EXPECT_EQ(r.out, want);
}

TEST(Cli, EvalRejectsBadInput) {
  TempDir dir;
  const auto path = dir.file("bad.hex");
  write(path, "0x800\n");
  EXPECT_EQ(run_cli({"eval", "--n", "1", "--in", path}).code, cli::kExitUsage);
  write(path, "0x001\n0x002\n");
  EXPECT_EQ(run_cli({"eval", "--n", "1", "--in", path}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"eval", "--n", "1", "--in", dir.file("missing.hex")}).code, cli::kExitUsage);
}

TEST(Cli, EmitAndCse) {
  TempDir dir;
  const auto prog = dir.file("p.slp"), opt = dir.file("o.slp");
  ASSERT_EQ(run_cli({"emit", "--n", "23", "--out", prog}).code, 0);
  EXPECT_EQ(read(prog), to_text(compile(build_plan(Field::standard(), 23))));
  const auto r = run_cli({"cse", "--in", prog, "--out", opt, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["xor_before"], 552);
  EXPECT_LT(j["xor_after"].get<int>(), 552);
  EXPECT_EQ(j["cmul"], 84);
  const Slp before = parse_slp(read(prog)), after = parse_slp(read(opt));
  testing::Rng rng(82);
  for (int t = 0; t < 100; ++t) {
    const auto f = rng.elements(23);
    ASSERT_EQ(run(after, Field::standard(), f), run(before, Field::standard(), f));
  }
}

TEST(Cli, Complexity) {
  const auto r = run_cli({"complexity", "--n", "23", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["mult"], 84);
  EXPECT_EQ(j["add_direct"], 552);
  EXPECT_EQ(j["add_combined"], 1052);
  EXPECT_LT(j["add_cse"].get<int>(), 552);
  EXPECT_EQ(lines(run_cli({"complexity", "--n", "23"}).out)[1], "mult = 84");
}

TEST(Cli, Bench) {
  const auto r = run_cli({"bench", "--n", "23", "--trials", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["n"], 23);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"cosets", "--n", "7"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"cosets", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"plan", "--n", "23"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitOk);
}

}  // namespace
}  // namespace cfft11
