// Copyright 2026 The edacsc Authors.
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "edacsc/corpus_io.h"
#include "json.hpp"
#include "test_util.h"

namespace edacsc {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("edacsc_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunResult Run(const std::string& args) {
    const auto out = dir_ / "stdout.txt";
    const auto err = dir_ / "stderr.txt";
    const std::string cmd = std::string(EDACSC_BIN) + " " + args + " >" +
                            out.string() + " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, Slurp(out), Slurp(err)};
  }

  std::string Path(const std::string& name) { return (dir_ / name).string(); }
  static std::string Fixture(const std::string& name) {
    return std::string(EDACSC_FIXTURES) + "/" + name;
  }

  fs::path dir_;
};

TEST_F(CliTest, StatsOnTinyFixture) {
  const auto r = Run("stats --in " + Fixture("tiny.jsonl"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["sentences"], 3);
  EXPECT_EQ(j["errors"], 3);
  EXPECT_EQ(j["chars"], 20 + 5 + 13);
  EXPECT_DOUBLE_EQ(j["avg_length"].get<double>(), 12.7);
}

TEST_F(CliTest, ScheduleWritesManifest) {
  const auto out = Path("g.json");
  const auto r =
      Run("schedule --procedure g --short s.jsonl --reduce r.jsonl "
          "--out " +
          out);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(Slurp(out));
  EXPECT_EQ(j["name"], "g");
  EXPECT_EQ(j["stages"][0]["dataset"], "r.jsonl");
  EXPECT_EQ(j["stages"][0]["init"], "fresh");
  EXPECT_EQ(j["stages"][1]["dataset"], "s.jsonl");
  EXPECT_EQ(j["stages"][1]["init"], "best_of_previous");
  EXPECT_TRUE(fs::exists(out + ".run.toml"));
}

TEST_F(CliTest, EvalOnFourSentenceFixture) {
  const auto r = Run("eval --gold " + Fixture("eval_gold.jsonl") + " --pred " +
                     Fixture("eval_pred.jsonl"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["detection"]["prec"].get<double>(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(j["detection"]["rec"].get<double>(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(j["fpr"].get<double>(), 1.0);
  EXPECT_EQ(j["counts"]["n"], 4);
  EXPECT_EQ(j["degenerate"], false);
}

TEST_F(CliTest, ExitCodes) {
  auto r = Run("schedule --procedure h");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(json::parse(r.err.substr(r.err.find("{\"error\"")))["error"],
            "usage");
  EXPECT_EQ(Run("frobnicate").status, 2);
  EXPECT_EQ(Run("stats --in " + Fixture("tiny.jsonl") + " --bogus").status, 2);

  r = Run("validate --in " + Fixture("bad_length.jsonl"));
  EXPECT_EQ(r.status, 3);
  EXPECT_EQ(Run("stats --in " + Fixture("bad_length.jsonl")).status, 3);
  EXPECT_EQ(Run("validate --in " + Fixture("tiny.jsonl")).status, 0);

  r = Run("stats --in " + Path("missing.jsonl"));
  EXPECT_EQ(r.status, 5);
  EXPECT_EQ(json::parse(r.err.substr(r.err.find("{\"error\"")))["error"], "io");

  r = Run("correct --in " + Fixture("tiny.jsonl") + " --out " +
          Path("p.jsonl") + " --cmd false");
  EXPECT_EQ(r.status, 4);
}

TEST_F(CliTest, CorrectWithMockChildThenEval) {
  const std::string child = std::string(EDACSC_BIN) +
                            " mock-corrector --spec " +
                            Fixture("mock_spec.json");
  const auto pred = Path("pred.jsonl");
  auto r =
      Run("correct --in " + Fixture("tiny.jsonl") + " --out " + pred +
          " --cic --trace " + Path("trace.jsonl") + " --cmd '" + child + "'");
  ASSERT_EQ(r.status, 0) << r.err;
  r = Run("eval --gold " + Fixture("tiny.jsonl") + " --pred " + pred);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["correction"]["acc"], 1.0);
  EXPECT_EQ(j["fpr"], 0.0);
}

TEST_F(CliTest, ConfigFileFeedsFlagsAndFlagsWin) {
  const auto out1 = Path("a.jsonl"), out2 = Path("b.jsonl");
  auto r = Run("augment split --config " + Fixture("split.toml") + " --in " +
               Fixture("tiny.jsonl") + " --out " + out1);
  ASSERT_EQ(r.status, 0) << r.err;
  r = Run("augment split --config " + Fixture("split.toml") +
          " --min-seg 100 --in " + Fixture("tiny.jsonl") + " --out " + out2);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.err.find("flag wins"), std::string::npos);
  EXPECT_EQ(ReadCorpus(out1, {}).size(), 6u);
  EXPECT_EQ(ReadCorpus(out2, {}).size(), 3u);

  // Replaying the snapshot reproduces the run.
  const auto out3 = Path("c.jsonl");
  fs::copy_file(out1 + ".run.toml", Path("replay.toml"));
  r = Run("augment split --config " + Path("replay.toml") + " --out " + out3);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(Slurp(out3), Slurp(out1));
}

TEST_F(CliTest, PipelineIsDeterministic) {
  std::mt19937_64 rng(21);
  std::vector<ParallelSample> corpus;
  for (int i = 0; i < 300; ++i) {
    auto s = testing::RandomSampleWithTypos("p" + std::to_string(i),
                                            4 + rng() % 30, rng() % 4, rng);
    for (std::size_t j = 3; j < s.target.size(); j += 5 + rng() % 4) {
      s.target[j] = s.source[j] = U'，';
    }
    corpus.push_back(s);
  }
  WriteCorpus(corpus, Path("in.jsonl"), CorpusFormat::kJsonl);

  auto pipeline = [&](const std::string& tag, int threads) {
    const auto t = " --threads " + std::to_string(threads);
    EXPECT_EQ(Run("validate --in " + Path("in.jsonl")).status, 0);
    EXPECT_EQ(Run("augment split --in " + Path("in.jsonl") + " --out " +
                  Path(tag + "short.jsonl") + t)
                  .status,
              0);
    EXPECT_EQ(Run("augment reduce --in " + Path("in.jsonl") + " --out " +
                  Path(tag + "reduce.jsonl") + t)
                  .status,
              0);
    EXPECT_EQ(
        Run("merge --in-a " + Path(tag + "short.jsonl") + " --in-b " +
            Path(tag + "reduce.jsonl") + " --out " + Path(tag + "merge.jsonl"))
            .status,
        0);
    return Run("stats --in " + Path(tag + "merge.jsonl") + t).out;
  };
  const auto first = pipeline("x", 1);
  const auto second = pipeline("y", 4);
  EXPECT_EQ(first, second);
  for (const std::string f : {"short.jsonl", "reduce.jsonl", "merge.jsonl"}) {
    EXPECT_EQ(Slurp(Path("x" + f)), Slurp(Path("y" + f))) << f;
  }
}

}  // namespace
}  // namespace edacsc
