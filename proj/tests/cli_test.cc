// Copyright 2026 The seldkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
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
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

#include "seld/cli.h"
#include "seld/metadata_csv.h"
#include "seld/wav_io.h"

namespace seld {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("seld_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the installed binary and returns its exit status.
  int Run(const std::string& args) {
    const std::string cmd = std::string(SELD_CLI_PATH) + " " + args + " > " +
                            (dir_ / "stdout.txt").string() + " 2> " +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string Slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  std::string Stdout() { return Slurp(dir_ / "stdout.txt"); }
  std::string Stderr() { return Slurp(dir_ / "stderr.txt"); }
  std::string P(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, EvaluateSelfIsPerfect) {
  WriteMetadataCsv(dir_ / "ref.csv", {{0, 0, 0, 30, 0}, {1, 3, 0, -100, 0}});
  ASSERT_EQ(Run("evaluate --pred " + P("ref.csv") + " --ref " + P("ref.csv") +
                " --json " + P("s.json")),
            0);
  EXPECT_NE(Stdout().find("seld_score = 0.0000\n"), std::string::npos);
  const std::string json = Slurp(dir_ / "s.json");
  EXPECT_NE(json.find("\"seld_score\": 0.0"), std::string::npos);
  EXPECT_NE(json.find("\"f_score\": 1.0"), std::string::npos);
}

TEST_F(CliTest, SynthThenAugment) {
  ASSERT_EQ(Run("synth --out " + P("syn") + " --num-scenes 1 --scene-length 60"), 0)
      << Stderr();
  const fs::path wav = dir_ / "syn" / "scenes" / "scene_000.wav";
  const fs::path csv = dir_ / "syn" / "scenes" / "scene_000.csv";
  ASSERT_TRUE(fs::exists(wav));
  EXPECT_EQ(ReadWav(wav).num_samples(), 60u * 24000u);
  ASSERT_EQ(Run("augment --in " + wav.string() + " --labels " + csv.string() +
                " --out " + P("aug")),
            0)
      << Stderr();
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir_ / "aug")) files += e.is_regular_file();
  EXPECT_EQ(files, 8);
  EXPECT_EQ(Slurp(dir_ / "aug" / "scene_000_rot000.wav"), Slurp(wav));
  EXPECT_EQ(Slurp(dir_ / "aug" / "scene_000_rot000.csv"), Slurp(csv));
  const AnnotationList rot = ReadMetadataCsv(dir_ / "aug" / "scene_000_rot180.csv");
  EXPECT_EQ(rot.size(), ReadMetadataCsv(csv).size());
}

TEST_F(CliTest, RenderEstimateEvaluate) {
  ASSERT_EQ(Run("synth --out " + P("syn") + " --num-scenes 1 --scene-length 2 --seed 4"), 0);
  const std::string wav = P("syn/scenes/scene_000.wav");
  ASSERT_EQ(Run("render --in " + wav + " --repr stereo --out " + P("st.wav")), 0)
      << Stderr();
  EXPECT_EQ(ReadWav(dir_ / "st.wav").num_channels(), 2);
  ASSERT_EQ(Run("estimate --in " + wav + " --repr foa --out " + P("pred.csv")), 0)
      << Stderr();
  ASSERT_EQ(Run("report --pred " + P("pred.csv") + " --ref " +
                P("syn/scenes/scene_000.csv") + " --out " + P("rep")),
            0)
      << Stderr();
  EXPECT_TRUE(fs::exists(dir_ / "rep" / "report.json"));
  EXPECT_NE(Slurp(dir_ / "rep" / "confusion.csv").find("row,col,value"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Run("evaluate --pred x.csv"), 1);
  EXPECT_EQ(Run("no-such-command"), 1);
  EXPECT_EQ(Run("pipeline --out " + P("p") + " --repr foa,ambix"), 1);
  EXPECT_NE(Stderr().find("error[invalid_argument]"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "p"));
}

TEST_F(CliTest, DataErrorsExitTwoWithoutPartialOutput) {
  std::ofstream(dir_ / "bad.csv") << "0,0,0,0,0\n1,0,zero,0,0\n";
  WriteMetadataCsv(dir_ / "ok.csv", {{0, 0, 0, 0, 0}});
  EXPECT_EQ(Run("report --pred " + P("bad.csv") + " --ref " + P("ok.csv") +
                " --out " + P("rep")),
            2);
  EXPECT_NE(Stderr().find("bad.csv:2:"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "rep"));

  AudioData mono;
  mono.sample_rate_hz = 24000;
  mono.channels.assign(1, std::vector<double>(2400, 0.0));
  WriteWav(dir_ / "mono.wav", mono);
  EXPECT_EQ(Run("estimate --in " + P("mono.wav") + " --repr foa --out " + P("e.csv")), 2);
  EXPECT_FALSE(fs::exists(dir_ / "e.csv"));

  AudioData foa48;
  foa48.sample_rate_hz = 48000;
  foa48.channels.assign(4, std::vector<double>(4800, 0.0));
  WriteWav(dir_ / "foa48.wav", foa48);
  EXPECT_EQ(Run("estimate --in " + P("foa48.wav") + " --repr foa --out " + P("e.csv")), 2);
  EXPECT_NE(Stderr().find("error[data_error]"), std::string::npos);
  EXPECT_EQ(Run("estimate --in " + P("foa48.wav") + " --repr foa --resample --out " +
                P("e.csv")),
            0)
      << Stderr();

  std::ofstream(dir_ / "text.wav") << "hello";
  EXPECT_EQ(Run("augment --in " + P("text.wav") + " --labels " + P("ok.csv") +
                " --out " + P("aug")),
            2);
  EXPECT_FALSE(fs::exists(dir_ / "aug"));
}

TEST_F(CliTest, DumpConfigReflectsOverrides) {
  std::ofstream(dir_ / "c.ini") << "[metrics]\ntolerance_deg = 12\n";
  ASSERT_EQ(Run("--config " + P("c.ini") + " --dump-config pipeline --out " + P("x") +
                " --seed 77"),
            0)
      << Stderr();
  const std::string dumped = Stdout();
  EXPECT_NE(dumped.find("tolerance_deg = 12\n"), std::string::npos);
  EXPECT_NE(dumped.find("seed = 77\n"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "x"));
  std::ofstream(dir_ / "bad.ini") << "[metrics]\ntolerence_deg = 12\n";
  EXPECT_EQ(Run("--config " + P("bad.ini") + " --dump-config"), 1);
}

TEST_F(CliTest, SmallPipelineOrdersRepresentations) {
  ASSERT_EQ(Run("pipeline --out " + P("run") + " --num-scenes 40 --scene-length 1"), 0)
      << Stderr();
  const std::string table = Stdout();
  EXPECT_NE(table.find("foa"), std::string::npos);
  EXPECT_NE(table.find("stereo"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "run" / "reports" / "results.json"));
  EXPECT_TRUE(fs::exists(dir_ / "run" / "reports" / "confusion_binaural.csv"));
  EXPECT_FALSE(fs::exists(dir_ / "run" / "rendered"));
  EXPECT_EQ(Slurp(dir_ / "run" / "reports" / "summary.txt"), table);

  const auto j = nlohmann::json::parse(Slurp(dir_ / "run" / "reports" / "results.json"));
  std::map<std::string, nlohmann::json> by_repr;
  for (const auto& r : j["results"]) by_repr[r["representation"]] = r;
  ASSERT_EQ(by_repr.size(), 3u);
  EXPECT_LT(by_repr["foa"]["scores"]["localization_error_deg"].get<double>(),
            by_repr["stereo"]["scores"]["localization_error_deg"].get<double>());
  EXPECT_LT(by_repr["foa"]["quadrants"]["front_back_confusion"].get<double>(),
            by_repr["stereo"]["quadrants"]["front_back_confusion"].get<double>());
}

TEST(RunCliTest, InProcessHelp) {
  std::ostringstream out, err;
  EXPECT_EQ(RunCli({"seld", "--help"}, out, err), kExitOk);
  EXPECT_NE(out.str().find("pipeline"), std::string::npos);
}

}  // namespace
}  // namespace seld
