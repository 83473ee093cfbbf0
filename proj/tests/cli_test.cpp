// Copyright 2026 The clutterkit Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "clutterkit/clutterkit.hpp"

#ifndef CLUTTER_BIN
#error "CLUTTER_BIN must point at the clutter executable"
#endif

namespace clutterkit {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("clutter_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  Outcome run(const std::string& args, const std::string& stdin_text = "") {
    const std::string in = file("stdin.txt", stdin_text);
    const std::string err = (dir_ / "stderr.txt").string();
    const std::string cmd = std::string("\"") + CLUTTER_BIN + "\" " + args + " <\"" + in +
                            "\" 2>\"" + err + "\"";
    Outcome r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream e(err);
    r.err.assign(std::istreambuf_iterator<char>(e), {});
    return r;
  }

  fs::path dir_;
};

const std::string kPath = "elements 1 2 3\nrow 1 2\nrow 2 3\n";
const std::string kTriangle = "elements 1 2 3\nrow 1 2\nrow 1 3\nrow 2 3\n";

TEST_F(Cli, ShowCanonicalises) {
  const auto r = run("show " + file("m", "# comment\nelements 3 1 2\nrow 3 2\nrow 2 1\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kPath);
}

TEST_F(Cli, ShowReadsStdin) {
  const auto r = run("show -", kTriangle);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kTriangle);
}

TEST_F(Cli, DeleteAndContract) {
  const std::string m = file("m", kPath);
  auto r = run("delete " + m + " -e 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, serialize(delete_element(parse_clutter(kPath), "2")));
  r = run("contract " + m + " --element 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "elements 2 3\nrow 2\n");
  r = run("delete " + m + " -e 9");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ElementNotFound"), std::string::npos) << r.err;
}

TEST_F(Cli, Blocker) {
  const auto r = run("blocker " + file("m", kPath));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "elements 1 2 3\nrow 2\nrow 1 3\n");
}

TEST_F(Cli, Connected) {
  auto r = run("connected " + file("m", kPath));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "connected\n");
  r = run("connected " + file("s", "elements 1 2\nrow 1\nrow 2\n"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "disconnected\n");
}

TEST_F(Cli, Minor) {
  const std::string m = file("m", kTriangle);
  auto r = run("minor " + m + " " + file("n", "elements 1 2\nrow 1\nrow 2\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "deletes -\ncontracts 3\n");
  r = run("minor " + m + " " + file("x", "elements 4\n"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "none\n");
}

TEST_F(Cli, SplitterMatchesLibrary) {
  const std::string n = "elements 1 2\nrow 1 2\n";
  const auto r = run("splitter " + file("m", kTriangle) + " " + file("n", n));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, format_step(find_splitter(parse_clutter(kTriangle), parse_clutter(n))));
  EXPECT_EQ(r.out, "delete 3\n  elements 1 2\n  row 1 2\n");
}

TEST_F(Cli, SplitterCounterexampleReport) {
  const auto r = run("splitter " + file("m", kTriangle) + " " + file("n", "elements 1\nrow -\n"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("TheoremCounterexample"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("candidates:\n"), std::string::npos);
  EXPECT_NE(r.err.find("minimal-black:"), std::string::npos);
}

TEST_F(Cli, SplitterPrecondition) {
  const auto r = run("splitter " + file("m", "elements 1 2\nrow 1\nrow 2\n") + " " +
                     file("n", "elements\n"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("PreconditionViolation"), std::string::npos) << r.err;
}

TEST_F(Cli, ChainMatchesLibrary) {
  const std::string m = file("m", kTriangle);
  auto r = run("chain " + m);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, format_chain(chain_to_empty(parse_clutter(kTriangle))));
  r = run("chain " + m + " " + file("n", "elements 1 2\nrow 1 2\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "delete 3\n  elements 1 2\n  row 1 2\n");
}

TEST_F(Cli, Dot) {
  const auto r = run("dot " + file("m", kPath));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, to_dot(incidence_graph(parse_clutter(kPath))));
  EXPECT_EQ(r.out.rfind("graph G {\n", 0), 0u);
}

TEST_F(Cli, VerifyIdentities) {
  const auto r = run("verify --n 3 --identities");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, verify_identities(3).to_text());
}

// The unrestricted theorem has 9 counterexamples at n=3, all with a
// one-element target holding the empty row.
TEST_F(Cli, VerifyTheoremReportsTrueCounts) {
  const auto r = run("verify --n 3 --theorem --jobs 2");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, verify_theorem(3).to_text());
  EXPECT_NE(r.out.find("theorem n=3 tested=61 passed=52 counterexamples=9\n"), std::string::npos);
  EXPECT_NE(r.out.find("theorem-nonexceptional n=3 tested=52 passed=52 counterexamples=0\n"),
            std::string::npos);
}

TEST_F(Cli, VerifyDefaultRunsBoth) {
  const auto r = run("verify --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, verify_identities(2).to_text() + verify_theorem(2).to_text());
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
  EXPECT_EQ(run("delete x").code, 64);
  EXPECT_EQ(run("verify --n 2 --identities --theorem").code, 64);
  EXPECT_EQ(run("verify --n 2 --jobs 0").code, 64);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, DataErrors) {
  EXPECT_EQ(run("show " + (dir_ / "missing").string()).code, 65);
  auto r = run("show " + file("bad", "row 1\n"));
  EXPECT_EQ(r.code, 65);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos) << r.err;
  r = run("show " + file("chain", "elements 1 2\nrow 1\nrow 1 2\n"));
  EXPECT_EQ(r.code, 65);
  EXPECT_NE(r.err.find("AntichainViolation"), std::string::npos) << r.err;
  EXPECT_EQ(run("show " + file("foreign", "elements 1\nrow 2\n")).code, 65);
}

}  // namespace
}  // namespace clutterkit
