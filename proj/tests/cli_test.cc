// Copyright 2026 The hamsq Authors
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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "hamsq/corpus.h"
#include "hamsq/powers.h"
#include "hamsq/serialize.h"
#include "oracles.h"

namespace hamsq {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(HAMSQ_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hamsq_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, SquareEmitsGraph6) {
  const std::string in = write("c6.g6", to_graph6(cycle_graph(6)) + "\n");
  const CliRun r = run("square --in " + in);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, to_graph6(square(cycle_graph(6))) + "\n");
}

TEST_F(CliTest, FkFoundAndCheck) {
  const std::string in = write("c5.el", to_edge_list(cycle_graph(5)));
  const CliRun r = run("fk --in " + in + " --k 4 --a 0,2,1,3 --format json");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema-version"], kSchemaVersion);
  const std::string cert = write("cert.json", j["results"][0].dump());
  EXPECT_EQ(run("fk --in " + in + " --k 4 --a 0,2,1,3 --check " + cert).code, 0);
  EXPECT_EQ(run("fk --in " + in + " --k 4 --a 0,1,2,3 --check " + cert).code, 1);
}

TEST_F(CliTest, ExitCodes) {
  const std::string claw = write("claw.el", to_edge_list(full_subdivision(star_graph(3))));
  EXPECT_EQ(run("hamcycle --in " + claw).code, 1);
  const std::string c5 = write("c5.g6", to_graph6(cycle_graph(5)) + "\n");
  EXPECT_EQ(run("fk --in " + c5 + " --k 2 --a 0,1").code, 64);
  EXPECT_EQ(run("fk --in " + c5 + " --k 3 --a 0,0,1").code, 64);
  EXPECT_EQ(run("jeps-find --in " + c5 + " --v 1 --w 1").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
  EXPECT_EQ(run("verify nosuchtarget --stream " + c5).code, 64);
  const std::string sk4 = write("sk4.el", to_edge_list(full_subdivision(complete_graph(4))));
  EXPECT_EQ(run("fk --in " + sk4 + " --k 4 --a 0,1,2,3 --budget 2").code, 2);
  const std::string bad = write("bad.g6", "C~\n??x\n");
  EXPECT_NE(run("square --in " + bad).code, 0);
}

TEST_F(CliTest, BudgetFromEnvironment) {
  const std::string sk4 = write("sk4.el", to_edge_list(full_subdivision(complete_graph(4))));
  EXPECT_EQ(run("fk --in " + sk4 + " --k 4 --a 0,1,2,3").code, 0);
  EXPECT_EQ(std::system(("HAMSQ_BUDGET=2 " + std::string(HAMSQ_CLI) + " fk --in " + sk4 +
                         " --k 4 --a 0,1,2,3 >/dev/null 2>&1").c_str()) >> 8,
            2);
  EXPECT_EQ(run("fk --in " + sk4 + " --k 4 --a 0,1,2,3 --budget 5e7").code, 0);
}

TEST_F(CliTest, VerifyReportIsByteIdenticalAcrossJobs) {
  const std::string data = oracle::data_path("dt_blocks_n3-10.g6");
  const std::string a = (dir_ / "a.json").string(), b = (dir_ / "b.json").string();
  EXPECT_EQ(run("verify theorem2 --stream " + data + " --jobs 1 --format json --out " + a).code, 0);
  EXPECT_EQ(run("verify theorem2 --stream " + data + " --jobs 3 --format json --out " + b).code, 0);
  std::ifstream fa(a), fb(b);
  const std::string ta((std::istreambuf_iterator<char>(fa)), {});
  const std::string tb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(ta.empty());
  EXPECT_EQ(ta, tb);
}

TEST_F(CliTest, FilterFromStdin) {
  const std::string data = oracle::data_path("graphs_n1-8.g6");
  const CliRun r = run("filter --in - --keep two-connected,dt --min-n 6 --max-n 6 < " + data);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST_F(CliTest, BlocksAndDtJson) {
  const std::string in = write("bowtie.el", "5 6\n0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n");
  const CliRun blocks = run("blocks --in " + in + " --format json");
  ASSERT_EQ(blocks.code, 0);
  EXPECT_NO_THROW(Json::parse(blocks.out));
  const CliRun dt = run("dt --in " + in);
  EXPECT_EQ(dt.code, 0);
  EXPECT_FALSE(dt.out.empty());
}

TEST_F(CliTest, EpsAndWcycle) {
  const std::string in = write("k4.g6", "C~\n");
  EXPECT_EQ(run("eps-find --in " + in + " --zero 0 --at-most-one 1").code, 0);
  EXPECT_EQ(run("jeps-find --in " + in + " --v 0 --w 1 --zero 0,1").code, 0);
  EXPECT_EQ(run("wcycle --in " + in + " --w 0,1,2,3").code, 0);
  const std::string star = write("star.el", to_edge_list(star_graph(3)));
  EXPECT_EQ(run("eps-find --in " + star).code, 1);
}

TEST_F(CliTest, HuntReportsRefutationsWithoutFailing) {
  const std::string data = oracle::data_path("graphs_n1-8.g6");
  const std::string sevens = write("n7.g6", run("filter --in " + data + " --keep two-connected --min-n 7 --max-n 7").out);
  const CliRun r = run("hunt-fk --k 5 --stream " + sevens + " --format json");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["totals"]["unknown"], 0);
  EXPECT_EQ(j["schema-version"], kSchemaVersion);
}

}  // namespace
}  // namespace hamsq
