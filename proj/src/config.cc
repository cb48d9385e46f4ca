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

#include "seld/config.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "seld/error.h"

namespace seld {

namespace {

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double ParseDouble(const std::string& key, const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    ThrowInvalidArgument(key + ": '" + s + "' is not a number");
  }
  return v;
}

template <typename T>
T ParseInteger(const std::string& key, const std::string& s) {
  T v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    ThrowInvalidArgument(key + ": '" + s + "' is not an integer");
  }
  return v;
}

bool ParseBool(const std::string& key, const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  ThrowInvalidArgument(key + ": '" + s + "' is not a boolean");
}

std::string FormatBool(bool b) { return b ? "true" : "false"; }

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

struct Field {
  const char* section;
  const char* key;
  std::function<std::string(const PipelineConfig&)> get;
  std::function<void(PipelineConfig&, const std::string& key,
                     const std::string&)>
      set;
};

#define SELD_DOUBLE(sec, name, member)                                   \
  Field {                                                                \
    sec, name, [](const PipelineConfig& c) { return FormatDouble(c.member); }, \
        [](PipelineConfig& c, const std::string& k, const std::string& v) { \
          c.member = ParseDouble(k, v);                                  \
        }                                                                \
  }
#define SELD_INT(sec, name, member)                                       \
  Field {                                                                 \
    sec, name,                                                            \
        [](const PipelineConfig& c) { return std::to_string(c.member); }, \
        [](PipelineConfig& c, const std::string& k, const std::string& v) { \
          c.member = ParseInteger<decltype(c.member)>(k, v);              \
        }                                                                 \
  }
#define SELD_BOOL(sec, name, member)                                         \
  Field {                                                                    \
    sec, name, [](const PipelineConfig& c) { return FormatBool(c.member); }, \
        [](PipelineConfig& c, const std::string& k, const std::string& v) {  \
          c.member = ParseBool(k, v);                                        \
        }                                                                    \
  }

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = {
      {"pipeline", "representations",
       [](const PipelineConfig& c) {
         std::string s;
         for (Representation r : c.representations) {
           if (!s.empty()) s += ",";
           s += RepresentationName(r);
         }
         return s;
       },
       [](PipelineConfig& c, const std::string&, const std::string& v) {
         c.representations.clear();
         for (const auto& name : SplitList(v)) {
           c.representations.push_back(ParseRepresentation(name));
         }
       }},
      SELD_BOOL("pipeline", "horizontal_only", horizontal_only),
      SELD_BOOL("pipeline", "acs", acs_enabled),
      SELD_BOOL("pipeline", "keep_audio", keep_audio),
      SELD_INT("pipeline", "seed", seed),

      {"synthesis", "suite",
       [](const PipelineConfig& c) { return SuiteKindName(c.synthesis.suite); },
       [](PipelineConfig& c, const std::string&, const std::string& v) {
         c.synthesis.suite = ParseSuiteKind(v);
       }},
      SELD_INT("synthesis", "num_scenes", synthesis.num_scenes),
      SELD_DOUBLE("synthesis", "scene_length_s", synthesis.scene_length_s),
      SELD_DOUBLE("synthesis", "total_length_s", synthesis.total_length_s),
      SELD_INT("synthesis", "num_classes", synthesis.num_classes),
      SELD_INT("synthesis", "class_index", synthesis.class_index),
      {"synthesis", "signal",
       [](const PipelineConfig& c) { return SignalKindName(c.synthesis.signal); },
       [](PipelineConfig& c, const std::string&, const std::string& v) {
         c.synthesis.signal = ParseSignalKind(v);
       }},
      {"synthesis", "noise_floor_db",
       [](const PipelineConfig& c) {
         return c.synthesis.noise_floor_db
                    ? FormatDouble(*c.synthesis.noise_floor_db)
                    : std::string("none");
       },
       [](PipelineConfig& c, const std::string& k, const std::string& v) {
         if (v == "none") {
           c.synthesis.noise_floor_db.reset();
         } else {
           c.synthesis.noise_floor_db = ParseDouble(k, v);
         }
       }},
      SELD_DOUBLE("synthesis", "t60_s", synthesis.t60_s),
      SELD_DOUBLE("synthesis", "direct_to_reverb_db",
                  synthesis.direct_to_reverb_db),

      {"renderer", "method",
       [](const PipelineConfig& c) {
         return std::string(c.renderer.method == BinauralMethod::kParametric
                                ? "parametric"
                                : "virtual_ring");
       },
       [](PipelineConfig& c, const std::string& k, const std::string& v) {
         if (v == "parametric") {
           c.renderer.method = BinauralMethod::kParametric;
         } else if (v == "virtual_ring") {
           c.renderer.method = BinauralMethod::kVirtualRing;
         } else {
           ThrowInvalidArgument(k + ": expected parametric or virtual_ring");
         }
       }},
      SELD_DOUBLE("renderer", "head_radius_m", renderer.head_radius_m),
      SELD_DOUBLE("renderer", "speed_of_sound_mps",
                  renderer.speed_of_sound_mps),
      {"renderer", "virtual_speaker_azimuths_deg",
       [](const PipelineConfig& c) {
         std::string s;
         for (double az : c.renderer.virtual_speaker_azimuths_deg) {
           if (!s.empty()) s += ",";
           s += FormatDouble(az);
         }
         return s;
       },
       [](PipelineConfig& c, const std::string& k, const std::string& v) {
         c.renderer.virtual_speaker_azimuths_deg.clear();
         for (const auto& item : SplitList(v)) {
           c.renderer.virtual_speaker_azimuths_deg.push_back(
               ParseDouble(k, item));
         }
       }},
      SELD_DOUBLE("renderer", "shadow_min_alpha", renderer.shadow_min_alpha),
      SELD_DOUBLE("renderer", "shadow_min_angle_deg",
                  renderer.shadow_min_angle_deg),
      SELD_DOUBLE("renderer", "pinna_rear_gain_db",
                  renderer.pinna_rear_gain_db),
      SELD_DOUBLE("renderer", "pinna_shelf_hz", renderer.pinna_shelf_hz),
      SELD_INT("renderer", "frame_samples", renderer.frame_samples),
      SELD_DOUBLE("renderer", "diffuseness_smoothing",
                  renderer.diffuseness_smoothing),

      SELD_DOUBLE("estimator", "foa_threshold", estimator.foa_threshold),
      SELD_DOUBLE("estimator", "gcc_threshold", estimator.gcc_threshold),
      {"estimator", "stereo_policy",
       [](const PipelineConfig& c) {
         return AmbiguityPolicyName(c.estimator.stereo_policy);
       },
       [](PipelineConfig& c, const std::string&, const std::string& v) {
         c.estimator.stereo_policy = ParseAmbiguityPolicy(v);
       }},
      {"estimator", "binaural_policy",
       [](const PipelineConfig& c) {
         return AmbiguityPolicyName(c.estimator.binaural_policy);
       },
       [](PipelineConfig& c, const std::string&, const std::string& v) {
         c.estimator.binaural_policy = ParseAmbiguityPolicy(v);
       }},
      SELD_INT("estimator", "max_lag", estimator.max_lag),
      {"estimator", "stereo_separation_m",
       [](const PipelineConfig& c) {
         return c.estimator.stereo_separation_m
                    ? FormatDouble(*c.estimator.stereo_separation_m)
                    : std::string("auto");
       },
       [](PipelineConfig& c, const std::string& k, const std::string& v) {
         if (v == "auto") {
           c.estimator.stereo_separation_m.reset();
         } else {
           c.estimator.stereo_separation_m = ParseDouble(k, v);
         }
       }},
      SELD_BOOL("estimator", "subsample_peak", estimator.subsample_peak),
      SELD_INT("estimator", "class_hint", estimator.class_hint),

      SELD_DOUBLE("metrics", "tolerance_deg", metrics.tolerance_deg),
      SELD_DOUBLE("metrics", "accdoa_threshold", metrics.accdoa_threshold),
      SELD_INT("metrics", "accdoa_tracks", metrics.accdoa_tracks),
  };
  return fields;
}

#undef SELD_DOUBLE
#undef SELD_INT
#undef SELD_BOOL

}  // namespace

Representation ParseRepresentation(const std::string& name) {
  if (name == "foa") return Representation::kFoa;
  if (name == "binaural") return Representation::kBinaural;
  if (name == "stereo") return Representation::kStereo;
  ThrowInvalidArgument("unknown representation '" + name +
                       "' (expected foa, binaural or stereo)");
}

std::string RepresentationName(Representation r) {
  switch (r) {
    case Representation::kFoa:
      return "foa";
    case Representation::kBinaural:
      return "binaural";
    case Representation::kStereo:
      return "stereo";
  }
  return "foa";
}

int ChannelCount(Representation r) {
  return r == Representation::kFoa ? kNumFoaChannels : 2;
}

SuiteKind ParseSuiteKind(const std::string& name) {
  if (name == "single") return SuiteKind::kSingleSource;
  if (name == "polyphony") return SuiteKind::kPolyphony;
  if (name == "synmix") return SuiteKind::kSynmix;
  ThrowInvalidArgument("unknown suite '" + name +
                       "' (expected single, polyphony or synmix)");
}

std::string SuiteKindName(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::kSingleSource:
      return "single";
    case SuiteKind::kPolyphony:
      return "polyphony";
    case SuiteKind::kSynmix:
      return "synmix";
  }
  return "single";
}

void PipelineConfig::Validate() const {
  if (representations.empty()) {
    ThrowInvalidArgument("at least one representation is required");
  }
  std::set<Representation> seen(representations.begin(), representations.end());
  if (seen.size() != representations.size()) {
    ThrowInvalidArgument("representations must not repeat");
  }
  if (!horizontal_only) {
    ThrowInvalidArgument("only horizontal_only = true is supported");
  }
  if (synthesis.num_scenes < 1) ThrowInvalidArgument("num_scenes must be >= 1");
  if (!(synthesis.scene_length_s > 0.0)) {
    ThrowInvalidArgument("scene_length_s must be > 0");
  }
  if (!(synthesis.total_length_s > 0.0)) {
    ThrowInvalidArgument("total_length_s must be > 0");
  }
  if (synthesis.num_classes < 1 || synthesis.num_classes > kNumClasses) {
    ThrowInvalidArgument("num_classes must be in [1, 13]");
  }
  if (synthesis.class_index < 0 || synthesis.class_index >= kNumClasses) {
    ThrowInvalidArgument("class_index must be in [0, 12]");
  }
  if (synthesis.t60_s < 0.0) ThrowInvalidArgument("t60_s must be >= 0");
  renderer.Validate();
  if (estimator.max_lag < 1) ThrowInvalidArgument("max_lag must be >= 1");
  if (estimator.stereo_separation_m && !(*estimator.stereo_separation_m > 0.0)) {
    ThrowInvalidArgument("stereo_separation_m must be > 0");
  }
  if (estimator.class_hint < 0 || estimator.class_hint >= kNumClasses) {
    ThrowInvalidArgument("class_hint must be in [0, 12]");
  }
  if (!(metrics.tolerance_deg >= 0.0)) {
    ThrowInvalidArgument("tolerance_deg must be >= 0");
  }
  if (!(metrics.accdoa_threshold > 0.0 && metrics.accdoa_threshold < 1.0)) {
    ThrowInvalidArgument("accdoa_threshold must be in (0, 1)");
  }
  if (metrics.accdoa_tracks < 1) ThrowInvalidArgument("accdoa_tracks must be >= 1");
}

PipelineConfig ParseConfig(const std::string& text, const PipelineConfig& base) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    ThrowInvalidArgument("config: " + std::string(e.what()));
  }
  PipelineConfig cfg = base;
  for (const auto& [section, keys] : tree) {
    if (keys.empty() && !keys.data().empty()) {
      ThrowInvalidArgument("config: key '" + section + "' outside a section");
    }
    for (const auto& [key, value] : keys) {
      const std::string full = section + "." + key;
      const Field* field = nullptr;
      for (const Field& f : Fields()) {
        if (section == f.section && key == f.key) field = &f;
      }
      if (field == nullptr) ThrowInvalidArgument("config: unknown key " + full);
      field->set(cfg, full, value.data());
    }
  }
  return cfg;
}

PipelineConfig LoadConfig(const std::filesystem::path& path,
                          const PipelineConfig& base) {
  std::ifstream in(path);
  if (!in) ThrowIoError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str(), base);
}

std::string DumpConfig(const PipelineConfig& cfg) {
  std::string out;
  std::string section;
  for (const Field& f : Fields()) {
    if (section != f.section) {
      if (!section.empty()) out += "\n";
      section = f.section;
      out += "[" + section + "]\n";
    }
    out += std::string(f.key) + " = " + f.get(cfg) + "\n";
  }
  return out;
}

TwoChannelGeometry GeometryFor(Representation r, const PipelineConfig& cfg) {
  TwoChannelGeometry g;
  g.speed_of_sound_mps = cfg.renderer.speed_of_sound_mps;
  g.subsample_peak = cfg.estimator.subsample_peak;
  g.head_model = cfg.renderer;
  if (r == Representation::kStereo) {
    g.mode = TwoChannelMode::kStereo;
    g.separation_m = cfg.estimator.stereo_separation_m.value_or(
        StereoSeparationForLag(cfg.estimator.max_lag, g.sample_rate_hz,
                               g.speed_of_sound_mps));
  } else {
    g.mode = TwoChannelMode::kBinaural;
    g.separation_m = 2.0 * cfg.renderer.head_radius_m;
  }
  return g;
}

EventConversionConfig ConversionFor(Representation r, const PipelineConfig& cfg,
                                    uint64_t seed) {
  EventConversionConfig c;
  c.seed = seed;
  switch (r) {
    case Representation::kFoa:
      c.confidence_threshold = cfg.estimator.foa_threshold;
      c.policy = AmbiguityPolicy::kFront;
      break;
    case Representation::kBinaural:
      c.confidence_threshold = cfg.estimator.gcc_threshold;
      c.policy = cfg.estimator.binaural_policy;
      break;
    case Representation::kStereo:
      c.confidence_threshold = cfg.estimator.gcc_threshold;
      c.policy = cfg.estimator.stereo_policy;
      break;
  }
  return c;
}

}  // namespace seld
