// Copyright 2026 The Lipogram Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

namespace lipogram {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lipogram_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    const auto all = split_paragraphs(read_file(testing::data_path("gatsby.txt")));
    corpus_ = (dir_ / "corpus.txt").string();
    write_file(corpus_, join_paragraphs({all.begin(), all.begin() + 40}));
    model_ = (dir_ / "model.lm").string();
  }
  void TearDown() override { fs::remove_all(dir_); }

  static int run(std::vector<std::string> args) {
    args.insert(args.begin(), "lipogram");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    ::testing::internal::CaptureStdout();
    ::testing::internal::CaptureStderr();
    const int code = cli::run(static_cast<int>(argv.size()), argv.data());
    ::testing::internal::GetCapturedStdout();
    ::testing::internal::GetCapturedStderr();
    return code;
  }

  int train() { return run({"train", "--corpus", corpus_, "--model", model_, "--order", "3"}); }

  std::string out(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::string corpus_;
  std::string model_;
  const std::string lexicon_ = testing::data_path("lexicon.tsv");
  const std::string dictionary_ = testing::data_path("dictionary.txt");
};

TEST_F(Cli, TrainWritesALoadableModel) {
  ASSERT_EQ(train(), 0);
  const NGramModel model = NGramModel::load(model_);
  EXPECT_EQ(model.order(), 3);
  EXPECT_GT(model.vocabulary_size(), 100u);
}

TEST_F(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({"train", "--corpus", out("missing.txt"), "--model", model_}), 2);
  EXPECT_EQ(run({"train", "--corpus", corpus_, "--model", model_, "--order", "0"}), 1);
  EXPECT_EQ(run({"train", "--corpus", corpus_, "--model", model_, "--order", "x"}), 1);
  EXPECT_EQ(run({"frobnicate"}), 1);
  EXPECT_EQ(run({}), 1);
  EXPECT_EQ(run({"translate", "--corpus", corpus_, "--lexicon", lexicon_, "--method", "edelete",
                 "--paragraphs", "0", "--out", out("o")}),
            1);
  EXPECT_EQ(run({"translate", "--corpus", corpus_, "--lexicon", lexicon_, "--method", "wrong"}), 1);
  EXPECT_EQ(run({"translate", "--corpus", corpus_, "--lexicon", lexicon_, "--method", "beam"}), 1);
  EXPECT_EQ(run({"translate", "--corpus", corpus_, "--lexicon", lexicon_, "--letters", "e9"}), 1);
  write_file(out("bad.cfg"), "beam_width = 4\nshiny = yes\n");
  EXPECT_EQ(run({"translate", "--corpus", corpus_, "--lexicon", lexicon_, "--method", "edelete",
                 "--config", out("bad.cfg")}),
            2);
}

TEST_F(Cli, TranslateSatisfiesTheConstraint) {
  ASSERT_EQ(train(), 0);
  for (const std::string method : {"edelete", "synonym", "beam"}) {
    const std::string dir = out("t_" + method);
    ASSERT_EQ(run({"translate", "--corpus", corpus_, "--lexicon", lexicon_, "--model", model_,
                   "--method", method, "--letters", "e", "--paragraphs", "6", "--out", dir}),
              0)
        << method;
    const std::string text = read_file(dir + "/translation.txt");
    EXPECT_EQ(split_paragraphs(text).size(), 6u) << method;
    EXPECT_EQ(e_score(text, ConstraintSet::parse("e")), 0.0) << method;
  }
}

TEST_F(Cli, TranslateIsDeterministic) {
  ASSERT_EQ(train(), 0);
  write_file(out("run.cfg"), "mode = sampled\nbeam_width = 6\ncandidates_k = 3\n");
  for (const std::string name : {"a", "b"}) {
    ASSERT_EQ(run({"translate", "--corpus", corpus_, "--lexicon", lexicon_, "--model", model_,
                   "--letters", "t", "--paragraphs", "4", "--seed", "5", "--config", out("run.cfg"),
                   "--out", out(name)}),
              0);
  }
  EXPECT_EQ(read_file(out("a/translation.txt")), read_file(out("b/translation.txt")));
}

TEST_F(Cli, EvaluateWritesReport) {
  ASSERT_EQ(run({"translate", "--corpus", corpus_, "--lexicon", lexicon_, "--method", "edelete",
                 "--paragraphs", "5", "--out", out("t")}),
            0);
  ASSERT_EQ(run({"evaluate", "--corpus", corpus_, "--candidate", out("t/translation.txt"),
                 "--dictionary", dictionary_, "--paragraphs", "5", "--out", out("e")}),
            0);
  const auto report = nlohmann::json::parse(read_file(out("e/report.json")));
  EXPECT_EQ(report["paragraphs"].size(), 5u);
  EXPECT_EQ(report["aggregates"]["e_score"].get<double>(), 0.0);
  EXPECT_GT(report["aggregates"]["oov"].get<double>(), 0.0);
  EXPECT_EQ(report["config_echo"]["letters"], "e");

  // All 40 source paragraphs against a 5-paragraph candidate.
  EXPECT_EQ(run({"evaluate", "--corpus", corpus_, "--candidate", out("t/translation.txt"),
                 "--dictionary", dictionary_, "--out", out("e2")}),
            1);
  EXPECT_EQ(run({"evaluate", "--corpus", corpus_, "--dictionary", dictionary_}), 1);
}

TEST_F(Cli, EnvironmentSuppliesOptions) {
  ::setenv("LIPO_LETTERS", "a", 1);
  const int code = run({"translate", "--corpus", corpus_, "--lexicon", lexicon_, "--method", "edelete",
                        "--paragraphs", "2", "--out", out("env")});
  ::unsetenv("LIPO_LETTERS");
  ASSERT_EQ(code, 0);
  const std::string text = read_file(out("env/translation.txt"));
  EXPECT_EQ(text.find('a'), std::string::npos);
  EXPECT_NE(text.find('e'), std::string::npos);
}

TEST_F(Cli, SweepWritesAllArtifacts) {
  write_file(out("sweep.cfg"), "sweep.extra = et, e\n");
  ASSERT_EQ(run({"sweep", "--corpus", corpus_, "--lexicon", lexicon_, "--dictionary", dictionary_,
                 "--method", "edelete", "--paragraphs", "3", "--config", out("sweep.cfg"), "--out",
                 out("s")}),
            0);
  std::istringstream csv(read_file(out("s/sweep.csv")));
  const auto points = parse_sweep_csv(csv);
  ASSERT_EQ(points.size(), 28u);
  EXPECT_EQ(points.back().letters, "et");
  for (const auto& p : points) EXPECT_EQ(p.mean_e_score, 0.0);
  const auto report = nlohmann::json::parse(read_file(out("s/report.json")));
  EXPECT_EQ(report["points"].size(), 28u);
  EXPECT_FALSE(report["fit"].is_null());
  EXPECT_TRUE(fs::exists(out("s/sweep.svg")));
  EXPECT_TRUE(fs::exists(out("s/sweep.dat")));
}

}  // namespace
}  // namespace lipogram
