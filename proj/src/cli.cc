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

#include "seld/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "seld/ambisonics.h"
#include "seld/config.h"
#include "seld/error.h"
#include "seld/metadata_csv.h"
#include "seld/output_set.h"
#include "seld/pipeline.h"
#include "seld/resample.h"
#include "seld/wav_io.h"

namespace seld {

namespace fs = std::filesystem;

namespace {

constexpr int kInternalRate = 24000;

SampleFormat ParseFormat(const std::string& name) {
  if (name == "float32") return SampleFormat::kFloat32;
  if (name == "pcm16") return SampleFormat::kPcm16;
  ThrowInvalidArgument("unknown sample format '" + name +
                       "' (expected float32 or pcm16)");
}

AudioData LoadAudio(const fs::path& path, bool resample) {
  AudioData audio = ReadWav(path);
  if (audio.sample_rate_hz != kInternalRate) {
    if (!resample) {
      ThrowDataError(path.string() + ": sample rate " +
                     std::to_string(audio.sample_rate_hz) +
                     " Hz, expected 24000 Hz (pass --resample to convert)");
    }
    audio = ResampleAudio(audio, kInternalRate);
  }
  return audio;
}

// Options shared by every subcommand that reads the pipeline config.
struct Overrides {
  std::optional<uint64_t> seed;
  std::optional<std::string> suite;
  std::optional<int> num_scenes;
  std::optional<double> scene_length_s;
  std::optional<double> total_length_s;
  std::optional<std::string> representations;
  std::optional<bool> acs;
  std::optional<bool> keep_audio;
  std::optional<std::string> stereo_policy;
  std::optional<std::string> binaural_policy;
  std::optional<double> tolerance_deg;
  std::optional<int> class_hint;
};

void AddSynthesisOverrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--suite", o.suite, "Scene suite: single, polyphony or synmix");
  cmd->add_option("--num-scenes", o.num_scenes, "Scene count (single, synmix)");
  cmd->add_option("--scene-length", o.scene_length_s, "Scene length in seconds");
  cmd->add_option("--total-length", o.total_length_s,
                  "Total duration of the polyphony suite in seconds");
}

void AddEstimatorOverrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--stereo-policy", o.stereo_policy,
                  "Front/back policy for stereo: front, alternate, random, spectral");
  cmd->add_option("--binaural-policy", o.binaural_policy,
                  "Front/back policy for binaural: front, alternate, random, spectral");
  cmd->add_option("--class", o.class_hint, "Class index given to estimates");
}

PipelineConfig Apply(PipelineConfig cfg, const Overrides& o) {
  if (o.seed) cfg.seed = *o.seed;
  if (o.suite) cfg.synthesis.suite = ParseSuiteKind(*o.suite);
  if (o.num_scenes) cfg.synthesis.num_scenes = *o.num_scenes;
  if (o.scene_length_s) cfg.synthesis.scene_length_s = *o.scene_length_s;
  if (o.total_length_s) cfg.synthesis.total_length_s = *o.total_length_s;
  if (o.representations) {
    cfg = ParseConfig("[pipeline]\nrepresentations = " + *o.representations + "\n",
                      cfg);
  }
  if (o.acs) cfg.acs_enabled = *o.acs;
  if (o.keep_audio) cfg.keep_audio = *o.keep_audio;
  if (o.stereo_policy) cfg.estimator.stereo_policy = ParseAmbiguityPolicy(*o.stereo_policy);
  if (o.binaural_policy) {
    cfg.estimator.binaural_policy = ParseAmbiguityPolicy(*o.binaural_policy);
  }
  if (o.tolerance_deg) cfg.metrics.tolerance_deg = *o.tolerance_deg;
  if (o.class_hint) cfg.estimator.class_hint = *o.class_hint;
  cfg.Validate();
  return cfg;
}

std::string StemOf(const fs::path& p) { return p.stem().string(); }

void RunSynth(const PipelineConfig& cfg, const fs::path& out_dir,
              SampleFormat format, std::ostream& out) {
  OutputSet outputs;
  const std::vector<SceneSpec> specs = SuiteSpecs(cfg);
  for (size_t i = 0; i < specs.size(); ++i) {
    const LabeledScene scene = SynthesizeScene(specs[i]);
    char name[32];
    std::snprintf(name, sizeof(name), "scene_%03zu", i);
    const fs::path stem = out_dir / "scenes" / name;
    WriteWav(outputs.File(fs::path(stem) += ".wav"), FromFoa(scene.audio), format);
    WriteMetadataCsv(outputs.File(fs::path(stem) += ".csv"), scene.labels);
  }
  outputs.Commit();
  out << "wrote " << specs.size() << " scenes to " << (out_dir / "scenes").string()
      << "\n";
}

void RunAugment(const fs::path& in, const fs::path& labels, const fs::path& out_dir,
                std::ostream& out) {
  const AudioData audio = ReadWav(in);
  LabeledScene scene{ToFoa(audio), ReadMetadataCsv(labels)};
  const std::vector<LabeledScene> members = ExpandAcs(scene);
  OutputSet outputs;
  for (size_t m = 0; m < members.size(); ++m) {
    char suffix[16];
    std::snprintf(suffix, sizeof(suffix), "_rot%03d",
                  static_cast<int>(kAcsSteps[m]));
    const fs::path stem = out_dir / (StemOf(in) + suffix);
    WriteWav(outputs.File(fs::path(stem) += ".wav"), FromFoa(members[m].audio),
             audio.format);
    WriteMetadataCsv(outputs.File(fs::path(stem) += ".csv"), members[m].labels);
  }
  outputs.Commit();
  out << "wrote " << members.size() << " scenes to " << out_dir.string() << "\n";
}

void RunRender(const PipelineConfig& cfg, const fs::path& in, Representation r,
               const fs::path& out_path, bool resample, SampleFormat format) {
  if (r == Representation::kFoa) {
    ThrowInvalidArgument("render target must be binaural or stereo");
  }
  const FoaBuffer foa = ToFoa(LoadAudio(in, resample));
  const AudioData rendered = RenderRepresentation(foa, r, cfg);
  OutputSet outputs;
  WriteWav(outputs.File(out_path), rendered, format);
  outputs.Commit();
}

void RunEstimate(const PipelineConfig& cfg, const fs::path& in, Representation r,
                 const fs::path& out_path, bool resample) {
  const AudioData audio = LoadAudio(in, resample);
  const int frames = LabelFrameCount(static_cast<double>(audio.num_samples()) /
                                     audio.sample_rate_hz);
  const AnnotationList preds = PredictAnnotations(audio, r, cfg, frames, cfg.seed);
  OutputSet outputs;
  WriteMetadataCsv(outputs.File(out_path), preds);
  outputs.Commit();
}

void RunEvaluate(const PipelineConfig& cfg, const fs::path& pred,
                 const fs::path& ref, const std::optional<fs::path>& json_path,
                 std::ostream& out) {
  const MatchResult m =
      MatchAnnotations(ReadMetadataCsv(pred), ReadMetadataCsv(ref));
  const SeldScores s = ComputeScores(m, cfg.metrics.tolerance_deg);
  if (json_path) {
    OutputSet outputs;
    WriteTextFile(outputs, *json_path, ScoresToJson(s).dump(2) + "\n");
    outputs.Commit();
  }
  out << FormatScores(s);
}

void RunReport(const PipelineConfig& cfg, const fs::path& pred, const fs::path& ref,
               const std::optional<fs::path>& out_dir, std::ostream& out) {
  const RepresentationResult r =
      Evaluate(Representation::kFoa,
               MatchAnnotations(ReadMetadataCsv(pred), ReadMetadataCsv(ref)),
               cfg.metrics.tolerance_deg);
  const std::string text = FormatScores(r.scores) + "\n" +
                           FormatQuadrantReport(r.quadrants) + "\n" +
                           FormatPolyphonyReport(r.polyphony);
  if (out_dir) {
    OutputSet outputs;
    nlohmann::ordered_json j;
    j["scores"] = ScoresToJson(r.scores);
    j["quadrants"] = QuadrantReportToJson(r.quadrants);
    j["polyphony"] = PolyphonyReportToJson(r.polyphony);
    WriteTextFile(outputs, *out_dir / "report.txt", text);
    WriteTextFile(outputs, *out_dir / "report.json", j.dump(2) + "\n");
    WriteTextFile(outputs, *out_dir / "confusion.csv",
                  FormatConfusionTriples(r.quadrants));
    outputs.Commit();
  }
  out << text;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Classical sound event localization and detection toolkit"};
  app.name(args.empty() ? "seld" : fs::path(args[0]).filename().string());
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::optional<std::string> config_path;
  bool dump_config = false;
  app.add_option("--config", config_path, "INI configuration file");
  app.add_flag("--dump-config", dump_config,
               "Print the effective configuration and exit");

  Overrides o;
  std::string out_arg;
  std::string in_arg;
  std::string labels_arg;
  std::string repr_arg;
  std::string pred_arg;
  std::string ref_arg;
  std::string format_arg = "float32";
  std::optional<std::string> json_arg;
  std::optional<std::string> report_dir;
  bool resample = false;

  CLI::App* synth = app.add_subcommand("synth", "Generate FOA scenes with labels");
  synth->add_option("--out", out_arg, "Output directory")->required();
  synth->add_option("--format", format_arg, "WAV sample format: float32 or pcm16");
  AddSynthesisOverrides(synth, o);

  CLI::App* augment =
      app.add_subcommand("augment", "Write the four ACS rotations of a scene");
  augment->add_option("--in", in_arg, "FOA WAV file")->required();
  augment->add_option("--labels", labels_arg, "Metadata CSV")->required();
  augment->add_option("--out", out_arg, "Output directory")->required();

  CLI::App* render = app.add_subcommand("render", "Render FOA to binaural or stereo");
  render->add_option("--in", in_arg, "FOA WAV file")->required();
  render->add_option("--repr", repr_arg, "binaural or stereo")->required();
  render->add_option("--out", out_arg, "Output WAV file")->required();
  render->add_option("--format", format_arg, "WAV sample format: float32 or pcm16");
  render->add_flag("--resample", resample, "Resample input to 24 kHz");

  CLI::App* estimate = app.add_subcommand("estimate", "Estimate events from audio");
  estimate->add_option("--in", in_arg, "WAV file")->required();
  estimate->add_option("--repr", repr_arg, "foa, binaural or stereo")->required();
  estimate->add_option("--out", out_arg, "Predictions CSV")->required();
  estimate->add_flag("--resample", resample, "Resample input to 24 kHz");
  estimate->add_option("--seed", o.seed, "Seed for the random policy");
  AddEstimatorOverrides(estimate, o);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score predictions");
  evaluate->add_option("--pred", pred_arg, "Predictions CSV")->required();
  evaluate->add_option("--ref", ref_arg, "References CSV")->required();
  evaluate->add_option("--tolerance", o.tolerance_deg, "DOA tolerance in degrees");
  evaluate->add_option("--json", json_arg, "Also write scores as JSON");

  CLI::App* report =
      app.add_subcommand("report", "Quadrant and polyphony analysis of predictions");
  report->add_option("--pred", pred_arg, "Predictions CSV")->required();
  report->add_option("--ref", ref_arg, "References CSV")->required();
  report->add_option("--tolerance", o.tolerance_deg, "DOA tolerance in degrees");
  report->add_option("--out", report_dir, "Directory for report files");

  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "Synthesize, render, estimate and evaluate all representations");
  pipeline->add_option("--out", out_arg, "Output directory")->required();
  pipeline->add_option("--repr", o.representations,
                       "Comma-separated representations");
  pipeline->add_option("--acs", o.acs, "Expand scenes with ACS rotations (true/false)");
  pipeline->add_option("--keep-audio", o.keep_audio, "Write WAV files (true/false)");
  AddSynthesisOverrides(pipeline, o);
  AddEstimatorOverrides(pipeline, o);

  std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    PipelineConfig cfg;
    if (config_path) cfg = LoadConfig(*config_path);
    cfg = Apply(cfg, o);
    if (dump_config) {
      out << DumpConfig(cfg);
      return kExitOk;
    }
    if (*synth) {
      RunSynth(cfg, out_arg, ParseFormat(format_arg), out);
    } else if (*augment) {
      RunAugment(in_arg, labels_arg, out_arg, out);
    } else if (*render) {
      RunRender(cfg, in_arg, ParseRepresentation(repr_arg), out_arg, resample,
                ParseFormat(format_arg));
    } else if (*estimate) {
      RunEstimate(cfg, in_arg, ParseRepresentation(repr_arg), out_arg, resample);
    } else if (*evaluate) {
      RunEvaluate(cfg, pred_arg, ref_arg,
                  json_arg ? std::optional<fs::path>(*json_arg) : std::nullopt, out);
    } else if (*report) {
      RunReport(cfg, pred_arg, ref_arg,
                report_dir ? std::optional<fs::path>(*report_dir) : std::nullopt,
                out);
    } else if (*pipeline) {
      const PipelineResult result = RunPipeline(cfg, fs::path(out_arg));
      out << FormatComparisonTable(result);
    } else {
      err << app.help();
      return kExitUsage;
    }
  } catch (const Error& e) {
    const bool usage = e.kind() == ErrorKind::kInvalidArgument;
    const char* kind = usage ? "invalid_argument"
                       : e.kind() == ErrorKind::kIoError ? "io_error"
                                                         : "data_error";
    err << "error[" << kind << "]: " << e.what() << "\n";
    return usage ? kExitUsage : kExitDataError;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace seld
