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

#include "seld/pipeline.h"

#include <cstdarg>
#include <cstdio>

#include "seld/accdoa.h"
#include "seld/doa_estimators.h"
#include "seld/error.h"
#include "seld/metadata_csv.h"
#include "seld/output_set.h"

namespace seld {

namespace fs = std::filesystem;

namespace {

std::string Fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

std::string LeText(const std::optional<double>& le) {
  return le ? Fmt("%.2f", *le) : std::string("n/a");
}

nlohmann::ordered_json OptionalJson(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string SceneName(int index) { return Fmt("scene_%03d", index); }

}  // namespace

std::vector<SceneSpec> SuiteSpecs(const PipelineConfig& cfg) {
  const SynthesisConfig& s = cfg.synthesis;
  std::vector<SceneSpec> specs;
  switch (s.suite) {
    case SuiteKind::kSingleSource: {
      SingleSourceSuiteOptions o;
      o.num_scenes = s.num_scenes;
      o.scene_length_s = s.scene_length_s;
      o.class_index = s.class_index;
      o.signal = s.signal;
      o.seed = cfg.seed;
      specs = SingleSourceSuite(o);
      break;
    }
    case SuiteKind::kPolyphony: {
      PolyphonySuiteOptions o;
      o.total_length_s = s.total_length_s;
      o.scene_length_s = s.scene_length_s;
      o.num_classes = s.num_classes;
      o.signal = s.signal;
      o.seed = cfg.seed;
      specs = PolyphonySuite(o);
      break;
    }
    case SuiteKind::kSynmix: {
      SynmixSuiteOptions o;
      o.num_scenes = s.num_scenes;
      o.scene_length_s = s.scene_length_s;
      o.num_classes = s.num_classes;
      o.signal = s.signal;
      o.seed = cfg.seed;
      specs = SynmixSuite(o);
      break;
    }
  }
  for (SceneSpec& spec : specs) {
    spec.noise_floor_db = s.noise_floor_db;
    spec.reverb.t60_s = s.t60_s;
    spec.reverb.direct_to_reverb_db = s.direct_to_reverb_db;
  }
  return specs;
}

AudioData RenderRepresentation(const FoaBuffer& foa, Representation r,
                               const PipelineConfig& cfg) {
  switch (r) {
    case Representation::kFoa:
      return FromFoa(foa);
    case Representation::kBinaural:
      return FromStereo(FoaToBinaural(foa, cfg.renderer));
    case Representation::kStereo:
      return FromStereo(FoaToStereo(foa));
  }
  return FromFoa(foa);
}

AnnotationList PredictAnnotations(const AudioData& audio, Representation r,
                                  const PipelineConfig& cfg, int num_frames,
                                  uint64_t seed) {
  if (audio.num_channels() != ChannelCount(r)) {
    ThrowDataError(RepresentationName(r) + " input needs " +
                   std::to_string(ChannelCount(r)) + " channels, got " +
                   std::to_string(audio.num_channels()));
  }
  std::vector<DoaEstimate> estimates;
  if (r == Representation::kFoa) {
    estimates = EstimateFromFoa(ToFoa(audio));
  } else {
    estimates = EstimateFromTwoChannel(ToStereo(audio), GeometryFor(r, cfg),
                                       StftConfig{}, cfg.estimator.max_lag);
  }
  AnnotationList events = EstimatesToEvents(
      estimates, cfg.estimator.class_hint, ConversionFor(r, cfg, seed));
  std::erase_if(events, [num_frames](const EventAnnotation& a) {
    return a.frame_index >= num_frames;
  });
  const AccdoaGrid grid =
      EncodeAccdoa(events, num_frames, cfg.metrics.accdoa_tracks);
  return RoundForStorage(DecodeAccdoa(grid, cfg.metrics.accdoa_threshold));
}

RepresentationResult Evaluate(Representation r, MatchResult matches,
                              double tolerance_deg) {
  RepresentationResult out;
  out.representation = r;
  out.matches = std::move(matches);
  out.scores = ComputeScores(out.matches, tolerance_deg);
  out.quadrants = QuadrantConfusion(out.matches);
  out.polyphony = PolyphonyBreakdown(out.matches);
  return out;
}

PipelineResult RunPipeline(const PipelineConfig& cfg,
                           const std::optional<fs::path>& out_dir) {
  cfg.Validate();
  OutputSet outputs;
  const std::vector<SceneSpec> specs = SuiteSpecs(cfg);
  std::vector<MatchResult> matches(cfg.representations.size());

  int sequence = 0;
  for (size_t i = 0; i < specs.size(); ++i) {
    const LabeledScene original = SynthesizeScene(specs[i]);
    const std::string base = SceneName(static_cast<int>(i));
    if (out_dir) {
      WriteMetadataCsv(outputs.File(*out_dir / "scenes" / (base + ".csv")),
                       original.labels);
      if (cfg.keep_audio) {
        WriteWav(outputs.File(*out_dir / "scenes" / (base + ".wav")),
                 FromFoa(original.audio));
      }
    }
    std::vector<LabeledScene> members;
    std::vector<std::string> names;
    if (cfg.acs_enabled) {
      members = ExpandAcs(original);
      for (RotationStep step : kAcsSteps) {
        names.push_back(base + Fmt("_rot%03d", static_cast<int>(step)));
      }
      if (out_dir) {
        for (size_t m = 0; m < members.size(); ++m) {
          const fs::path stem = *out_dir / "augmented" / names[m];
          WriteMetadataCsv(outputs.File(fs::path(stem) += ".csv"),
                           members[m].labels);
          if (cfg.keep_audio) {
            WriteWav(outputs.File(fs::path(stem) += ".wav"),
                     FromFoa(members[m].audio));
          }
        }
      }
    } else {
      members.push_back(original);
      names.push_back(base);
    }

    for (size_t m = 0; m < members.size(); ++m, ++sequence) {
      const LabeledScene& scene = members[m];
      const AnnotationList refs = RoundForStorage(scene.labels);
      const int frames = LabelFrameCount(scene.audio.duration_seconds());
      for (size_t k = 0; k < cfg.representations.size(); ++k) {
        const Representation r = cfg.representations[k];
        const std::string repr = RepresentationName(r);
        const AudioData audio = RenderRepresentation(scene.audio, r, cfg);
        if (out_dir && cfg.keep_audio && r != Representation::kFoa) {
          WriteWav(outputs.File(*out_dir / "rendered" / repr /
                                (names[m] + ".wav")),
                   audio);
        }
        const uint64_t seed = cfg.seed * 1000003ull + sequence;
        const AnnotationList preds =
            PredictAnnotations(audio, r, cfg, frames, seed);
        if (out_dir) {
          WriteMetadataCsv(outputs.File(*out_dir / "predictions" / repr /
                                        (names[m] + ".csv")),
                           preds);
        }
        matches[k].Append(MatchAnnotations(preds, refs, sequence));
      }
    }
  }

  PipelineResult result;
  result.config = cfg;
  result.num_scenes = sequence;
  for (size_t k = 0; k < cfg.representations.size(); ++k) {
    result.results.push_back(Evaluate(cfg.representations[k],
                                      std::move(matches[k]),
                                      cfg.metrics.tolerance_deg));
  }

  if (out_dir) {
    const fs::path reports = *out_dir / "reports";
    WriteTextFile(outputs, reports / "config.ini", DumpConfig(cfg));
    WriteTextFile(outputs, reports / "summary.txt", FormatComparisonTable(result));
    WriteTextFile(outputs, reports / "results.json",
                  PipelineResultToJson(result).dump(2) + "\n");
    for (const RepresentationResult& r : result.results) {
      WriteTextFile(outputs,
                    reports / ("confusion_" +
                               RepresentationName(r.representation) + ".csv"),
                    FormatConfusionTriples(r.quadrants));
    }
  }
  outputs.Commit();
  return result;
}

std::string FormatScores(const SeldScores& s) {
  std::string out;
  out += Fmt("error_rate = %.4f\n", s.error_rate);
  out += Fmt("f_score = %.4f\n", s.f_score);
  out += "localization_error_deg = " + LeText(s.localization_error_deg) + "\n";
  out += Fmt("localization_recall = %.4f\n", s.localization_recall);
  out += Fmt("seld_score = %.4f\n", s.seld_score);
  out += Fmt("true_positives = %lld\n", static_cast<long long>(s.true_positives));
  out += Fmt("false_positives = %lld\n", static_cast<long long>(s.false_positives));
  out += Fmt("false_negatives = %lld\n", static_cast<long long>(s.false_negatives));
  out += Fmt("references = %lld\n", static_cast<long long>(s.num_refs));
  out += Fmt("matched_pairs = %lld\n", static_cast<long long>(s.num_pairs));
  return out;
}

std::string FormatQuadrantReport(const QuadrantReport& q) {
  std::string out = Fmt("%-12s", "true\\pred");
  for (int c = 0; c < kNumQuadrants; ++c) {
    out += Fmt("%8s", QuadrantName(static_cast<Quadrant>(c)).c_str());
  }
  out += Fmt("%10s%10s\n", "pairs", "LE");
  for (int r = 0; r < kNumQuadrants; ++r) {
    const Quadrant qr = static_cast<Quadrant>(r);
    out += Fmt("%-12s", QuadrantName(qr).c_str());
    for (int c = 0; c < kNumQuadrants; ++c) out += Fmt("%8.3f", q.confusion[r][c]);
    out += Fmt("%10lld%10s\n", static_cast<long long>(q.row_support(qr)),
               LeText(q.per_quadrant_le[r]).c_str());
  }
  out += Fmt("front_back_confusion = %.4f\n", q.FrontBackConfusion());
  out += Fmt("unmatched_predictions = %lld\n",
             static_cast<long long>(q.unmatched_preds));
  out += Fmt("unmatched_references = %lld\n",
             static_cast<long long>(q.unmatched_refs));
  return out;
}

std::string FormatPolyphonyReport(const PolyphonyReport& p) {
  std::string out = Fmt("%-8s%10s%10s%10s%10s\n", "sources", "frames", "refs",
                        "LR", "LE");
  for (const PolyphonyBucket& b : p.buckets) {
    const std::string label =
        b.sources >= kMaxPolyphonyBucket ? Fmt("%d+", b.sources) : Fmt("%d", b.sources);
    out += Fmt("%-8s%10lld%10lld%10.4f%10s\n", label.c_str(),
               static_cast<long long>(b.frames), static_cast<long long>(b.refs),
               b.localization_recall, LeText(b.localization_error_deg).c_str());
  }
  return out;
}

std::string FormatComparisonTable(const PipelineResult& result) {
  std::string out = Fmt("scenes = %d\n\n", result.num_scenes);
  out += Fmt("%-10s%8s%8s%9s%8s%8s%12s\n", "input", "ER", "F", "LE", "LR",
             "SELD", "front-back");
  for (const RepresentationResult& r : result.results) {
    const SeldScores& s = r.scores;
    out += Fmt("%-10s%8.3f%7.1f%%%9s%7.1f%%%8.3f%11.1f%%\n",
               RepresentationName(r.representation).c_str(), s.error_rate,
               100.0 * s.f_score, LeText(s.localization_error_deg).c_str(),
               100.0 * s.localization_recall, s.seld_score,
               100.0 * r.quadrants.FrontBackConfusion());
  }
  for (const RepresentationResult& r : result.results) {
    out += "\n[" + RepresentationName(r.representation) + "]\n";
    out += FormatQuadrantReport(r.quadrants);
    out += "\n" + FormatPolyphonyReport(r.polyphony);
  }
  return out;
}

std::string FormatConfusionTriples(const QuadrantReport& q) {
  std::string out = "row,col,value\n";
  for (const ConfusionCell& c : q.PlotTriples()) {
    out += QuadrantName(static_cast<Quadrant>(c.row)) + "," +
           QuadrantName(static_cast<Quadrant>(c.col)) + Fmt(",%.6f\n", c.value);
  }
  return out;
}

nlohmann::ordered_json ScoresToJson(const SeldScores& s) {
  nlohmann::ordered_json j;
  j["error_rate"] = s.error_rate;
  j["f_score"] = s.f_score;
  j["localization_error_deg"] = OptionalJson(s.localization_error_deg);
  j["localization_recall"] = s.localization_recall;
  j["seld_score"] = s.seld_score;
  j["true_positives"] = s.true_positives;
  j["false_positives"] = s.false_positives;
  j["false_negatives"] = s.false_negatives;
  j["references"] = s.num_refs;
  j["matched_pairs"] = s.num_pairs;
  return j;
}

nlohmann::ordered_json QuadrantReportToJson(const QuadrantReport& q) {
  nlohmann::ordered_json j;
  j["order"] = {"front", "left", "back", "right"};
  j["counts"] = q.counts;
  j["confusion"] = q.confusion;
  auto le = nlohmann::ordered_json::array();
  for (const auto& v : q.per_quadrant_le) le.push_back(OptionalJson(v));
  j["per_quadrant_le_deg"] = le;
  j["front_back_confusion"] = q.FrontBackConfusion();
  j["unmatched_predictions"] = q.unmatched_preds;
  j["unmatched_references"] = q.unmatched_refs;
  return j;
}

nlohmann::ordered_json PolyphonyReportToJson(const PolyphonyReport& p) {
  auto j = nlohmann::ordered_json::array();
  for (const PolyphonyBucket& b : p.buckets) {
    nlohmann::ordered_json e;
    e["sources"] = b.sources;
    e["or_more"] = b.sources >= kMaxPolyphonyBucket;
    e["frames"] = b.frames;
    e["references"] = b.refs;
    e["matched"] = b.matched;
    e["localization_recall"] = b.localization_recall;
    e["localization_error_deg"] = OptionalJson(b.localization_error_deg);
    j.push_back(e);
  }
  return j;
}

nlohmann::ordered_json PipelineResultToJson(const PipelineResult& result) {
  nlohmann::ordered_json j;
  j["scenes"] = result.num_scenes;
  j["suite"] = SuiteKindName(result.config.synthesis.suite);
  j["seed"] = result.config.seed;
  j["acs"] = result.config.acs_enabled;
  auto reps = nlohmann::ordered_json::array();
  for (const RepresentationResult& r : result.results) {
    nlohmann::ordered_json e;
    e["representation"] = RepresentationName(r.representation);
    e["scores"] = ScoresToJson(r.scores);
    e["quadrants"] = QuadrantReportToJson(r.quadrants);
    e["polyphony"] = PolyphonyReportToJson(r.polyphony);
    reps.push_back(e);
  }
  j["results"] = reps;
  return j;
}

}  // namespace seld
