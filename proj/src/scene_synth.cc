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

#include "seld/scene_synth.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "seld/angles.h"
#include "seld/error.h"
#include "seld/fft.h"

namespace seld {

namespace {

constexpr double kSignalRms = 0.1;
constexpr double kFadeSeconds = 0.005;
// Seed salts so that reverb and noise streams never alias an event's source.
constexpr uint64_t kReverbSalt = 0x9e3779b97f4a7c15ULL;
constexpr uint64_t kNoiseFloorSalt = 0xc2b2ae3d27d4eb4fULL;

void NormalizeRms(std::vector<double>& x, double target) {
  double energy = 0.0;
  for (double v : x) energy += v * v;
  if (energy <= 0.0) return;
  const double gain = target / std::sqrt(energy / x.size());
  for (double& v : x) v *= gain;
}

void ApplyFades(std::vector<double>& x, int sample_rate_hz) {
  const size_t fade = std::min(x.size() / 2,
                               static_cast<size_t>(kFadeSeconds * sample_rate_hz));
  for (size_t n = 0; n < fade; ++n) {
    const double g = 0.5 - 0.5 * std::cos(kPi * (n + 0.5) / fade);
    x[n] *= g;
    x[x.size() - 1 - n] *= g;
  }
}

size_t NextPowerOfTwo(size_t n) {
  size_t p = 2;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> FftConvolve(std::span<const double> a,
                                std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  const size_t out_len = a.size() + b.size() - 1;
  const size_t n = NextPowerOfTwo(out_len);
  RealFft fft(n);
  std::vector<double> pa(n, 0.0), pb(n, 0.0);
  std::copy(a.begin(), a.end(), pa.begin());
  std::copy(b.begin(), b.end(), pb.begin());
  std::vector<std::complex<double>> sa(fft.num_bins()), sb(fft.num_bins());
  fft.Forward(pa, sa);
  fft.Forward(pb, sb);
  for (size_t k = 0; k < sa.size(); ++k) sa[k] *= sb[k];
  fft.Inverse(sa, pa);
  pa.resize(out_len);
  for (double& v : pa) v /= static_cast<double>(n);
  return pa;
}

struct Interval {
  double begin;
  double end;
};

bool Overlaps(const Interval& a, const Interval& b) {
  return a.begin < b.end && b.begin < a.end;
}

void ValidateSpec(const SceneSpec& spec) {
  if (!(spec.length_s > 0.0)) ThrowInvalidArgument("scene length must be > 0");
  if (spec.sample_rate_hz <= 0) ThrowInvalidArgument("sample rate must be > 0");
  for (size_t i = 0; i < spec.events.size(); ++i) {
    const EventSpec& e = spec.events[i];
    const std::string where = "event " + std::to_string(i) + ": ";
    if (e.class_index < 0 || e.class_index >= kNumClasses) {
      ThrowInvalidArgument(where + "class index " +
                           std::to_string(e.class_index) +
                           " outside [0, 12]");
    }
    if (!(e.duration_s > 0.0)) ThrowInvalidArgument(where + "duration must be > 0");
    if (!(e.onset_s >= 0.0)) ThrowInvalidArgument(where + "onset must be >= 0");
    if (e.onset_s + e.duration_s > spec.length_s + 1e-9) {
      ThrowInvalidArgument(where + "event exceeds scene bounds");
    }
    if (e.trajectory.empty()) {
      e.direction.Validate();
    } else {
      Direction{0.0, e.direction.elevation_deg}.Validate();
    }
    if (e.signal == SignalKind::kCustom && e.custom_signal.empty()) {
      ThrowInvalidArgument(where + "custom signal is empty");
    }
  }
  // Sweep over onsets/offsets; offsets sort before onsets at equal times.
  std::vector<std::pair<double, int>> edges;
  for (const auto& e : spec.events) {
    edges.push_back({e.onset_s, +1});
    edges.push_back({e.onset_s + e.duration_s, -1});
  }
  std::sort(edges.begin(), edges.end());
  int active = 0;
  for (const auto& [t, delta] : edges) {
    active += delta;
    if (active > kMaxSimultaneousSources) {
      ThrowInvalidArgument("more than 5 simultaneous sources at t=" +
                           std::to_string(t) + " s");
    }
  }
}

// Lowest free source index per event among overlapping same-class events.
std::vector<int> AssignSourceIndices(const std::vector<EventSpec>& events) {
  std::vector<size_t> order(events.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return events[a].onset_s < events[b].onset_s;
  });
  std::vector<int> index(events.size(), -1);
  for (size_t i = 0; i < order.size(); ++i) {
    const EventSpec& e = events[order[i]];
    const Interval span{e.onset_s, e.onset_s + e.duration_s};
    std::vector<int> taken;
    for (size_t j = 0; j < i; ++j) {
      const EventSpec& o = events[order[j]];
      if (o.class_index == e.class_index &&
          Overlaps(span, {o.onset_s, o.onset_s + o.duration_s})) {
        taken.push_back(index[order[j]]);
      }
    }
    int candidate = 0;
    while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) {
      ++candidate;
    }
    index[order[i]] = candidate;
  }
  return index;
}

void AddDiffuseNoise(FoaBuffer& audio, double level_db, uint64_t seed) {
  std::mt19937_64 rng(seed ^ kNoiseFloorSalt);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double g = std::pow(10.0, level_db / 20.0);
  const double first_order = g / std::sqrt(3.0);
  for (int c = 0; c < kNumFoaChannels; ++c) {
    auto ch = audio.mutable_channel(c);
    const double gain = c == kW ? g : first_order;
    for (double& v : ch) v += gain * normal(rng);
  }
}

void AddReverbTail(FoaBuffer& audio, std::span<const double> dry,
                   size_t start, const ReverbConfig& reverb, uint64_t seed) {
  const int fs = audio.sample_rate_hz();
  const size_t ir_len = std::max<size_t>(1, static_cast<size_t>(reverb.t60_s * fs));
  std::mt19937_64 rng(seed ^ kReverbSalt);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double decay = std::log(1000.0) / (reverb.t60_s * fs);
  double dry_energy = 0.0;
  for (double v : dry) dry_energy += v * v;
  for (int c = 0; c < kNumFoaChannels; ++c) {
    std::vector<double> ir(ir_len);
    for (size_t n = 0; n < ir_len; ++n) ir[n] = normal(rng) * std::exp(-decay * n);
    std::vector<double> wet = FftConvolve(dry, ir);
    double wet_energy = 0.0;
    for (double v : wet) wet_energy += v * v;
    if (wet_energy <= 0.0) continue;
    double gain = std::sqrt(dry_energy / wet_energy *
                            std::pow(10.0, -reverb.direct_to_reverb_db / 10.0));
    if (c != kW) gain /= std::sqrt(3.0);
    auto ch = audio.mutable_channel(c);
    for (size_t n = 0; n < wet.size() && start + n < ch.size(); ++n) {
      ch[start + n] += gain * wet[n];
    }
  }
}

}  // namespace

SignalKind ParseSignalKind(const std::string& name) {
  if (name == "noise") return SignalKind::kNoiseBurst;
  if (name == "tones") return SignalKind::kToneComplex;
  if (name == "chirp") return SignalKind::kChirp;
  ThrowInvalidArgument("unknown signal kind '" + name +
                       "' (expected noise, tones or chirp)");
}

std::string SignalKindName(SignalKind kind) {
  switch (kind) {
    case SignalKind::kNoiseBurst:
      return "noise";
    case SignalKind::kToneComplex:
      return "tones";
    case SignalKind::kChirp:
      return "chirp";
    case SignalKind::kCustom:
      return "custom";
  }
  return "custom";
}

double EventSpec::AzimuthAt(double t) const {
  if (trajectory.empty()) return WrapAzimuth(direction.azimuth_deg);
  if (t <= trajectory.front().time_s) {
    return WrapAzimuth(trajectory.front().azimuth_deg);
  }
  for (size_t i = 1; i < trajectory.size(); ++i) {
    const auto& a = trajectory[i - 1];
    const auto& b = trajectory[i];
    if (t < b.time_s) {
      const double u = (t - a.time_s) / (b.time_s - a.time_s);
      return WrapAzimuth(a.azimuth_deg + u * (b.azimuth_deg - a.azimuth_deg));
    }
  }
  return WrapAzimuth(trajectory.back().azimuth_deg);
}

std::vector<double> GenerateSignal(SignalKind kind, size_t num_samples,
                                   int sample_rate_hz, uint64_t seed) {
  std::vector<double> x(num_samples, 0.0);
  if (num_samples == 0) return x;
  std::mt19937_64 rng(seed);
  const double fs = sample_rate_hz;
  switch (kind) {
    case SignalKind::kNoiseBurst: {
      std::normal_distribution<double> normal(0.0, 1.0);
      for (double& v : x) v = normal(rng);
      break;
    }
    case SignalKind::kToneComplex: {
      std::uniform_real_distribution<double> f0_dist(150.0, 400.0);
      std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * kPi);
      const double f0 = f0_dist(rng);
      const double top = std::min(8000.0, 0.45 * fs);
      for (int h = 1; h * f0 < top; ++h) {
        const double phase = phase_dist(rng);
        const double omega = 2.0 * kPi * h * f0 / fs;
        for (size_t n = 0; n < num_samples; ++n) {
          x[n] += std::sin(omega * n + phase);
        }
      }
      break;
    }
    case SignalKind::kChirp: {
      const double f_start = 200.0;
      const double f_end = std::min(8000.0, 0.45 * fs);
      const double duration = num_samples / fs;
      const double k = std::log(f_end / f_start) / duration;
      for (size_t n = 0; n < num_samples; ++n) {
        const double t = n / fs;
        x[n] = std::sin(2.0 * kPi * f_start * (std::exp(k * t) - 1.0) / k);
      }
      break;
    }
    case SignalKind::kCustom:
      ThrowInvalidArgument("custom signals are supplied, not generated");
  }
  NormalizeRms(x, kSignalRms);
  ApplyFades(x, sample_rate_hz);
  return x;
}

LabeledScene SynthesizeScene(const SceneSpec& spec) {
  ValidateSpec(spec);
  const int fs = spec.sample_rate_hz;
  const size_t length = static_cast<size_t>(std::llround(spec.length_s * fs));
  LabeledScene scene{FoaBuffer(length, fs), {}};
  const std::vector<int> source_index = AssignSourceIndices(spec.events);
  const int num_frames = LabelFrameCount(spec.length_s);

  for (size_t i = 0; i < spec.events.size(); ++i) {
    const EventSpec& e = spec.events[i];
    const size_t start = static_cast<size_t>(std::llround(e.onset_s * fs));
    const size_t wanted = static_cast<size_t>(std::llround(e.duration_s * fs));
    const size_t count = std::min(wanted, length - std::min(start, length));
    if (count == 0) continue;
    std::vector<double> mono;
    if (e.signal == SignalKind::kCustom) {
      mono.assign(count, 0.0);
      std::copy_n(e.custom_signal.begin(), std::min(count, e.custom_signal.size()),
                  mono.begin());
    } else {
      mono = GenerateSignal(e.signal, count, fs, e.seed);
    }
    const double gain = std::pow(10.0, e.gain_db / 20.0);
    for (double& v : mono) v *= gain;

    const double cos_el = CosDeg(e.direction.elevation_deg);
    const double sin_el = SinDeg(e.direction.elevation_deg);
    auto w = scene.audio.mutable_channel(kW);
    auto y = scene.audio.mutable_channel(kY);
    auto z = scene.audio.mutable_channel(kZ);
    auto x = scene.audio.mutable_channel(kX);
    if (e.trajectory.empty()) {
      const double az = e.direction.azimuth_deg;
      const double gy = SinDeg(az) * cos_el;
      const double gx = CosDeg(az) * cos_el;
      for (size_t n = 0; n < count; ++n) {
        const double s = mono[n];
        w[start + n] += s;
        y[start + n] += gy * s;
        z[start + n] += sin_el * s;
        x[start + n] += gx * s;
      }
    } else {
      for (size_t n = 0; n < count; ++n) {
        const double az = e.AzimuthAt(static_cast<double>(n) / fs);
        const double s = mono[n];
        w[start + n] += s;
        y[start + n] += SinDeg(az) * cos_el * s;
        z[start + n] += sin_el * s;
        x[start + n] += CosDeg(az) * cos_el * s;
      }
    }
    if (spec.reverb.t60_s > 0.0) {
      AddReverbTail(scene.audio, mono, start, spec.reverb, e.seed);
    }

    for (int f = 0; f < num_frames; ++f) {
      const double mid = (f + 0.5) * kLabelFrameSeconds;
      if (mid >= e.onset_s && mid < e.onset_s + e.duration_s) {
        scene.labels.push_back({f, e.class_index, source_index[i],
                                e.AzimuthAt(mid - e.onset_s),
                                e.direction.elevation_deg});
      }
    }
  }
  if (spec.noise_floor_db) {
    AddDiffuseNoise(scene.audio, *spec.noise_floor_db, spec.rng_seed);
  }
  SortAnnotations(scene.labels);
  return scene;
}

std::map<int, double> PolyphonyProfile(
    std::span<const AnnotationList> scenes) {
  std::map<int, long> counts;
  long total = 0;
  for (const auto& labels : scenes) {
    std::map<int, int> per_frame;
    for (const auto& a : labels) ++per_frame[a.frame_index];
    for (const auto& [frame, n] : per_frame) {
      ++counts[n];
      ++total;
    }
  }
  std::map<int, double> profile;
  for (const auto& [k, n] : counts) {
    profile[k] = static_cast<double>(n) / total;
  }
  return profile;
}

std::map<int, double> PolyphonyProfile(const AnnotationList& annotations) {
  return PolyphonyProfile(std::span<const AnnotationList>(&annotations, 1));
}

std::vector<SceneSpec> SingleSourceSuite(const SingleSourceSuiteOptions& opt) {
  if (opt.num_scenes < 1) ThrowInvalidArgument("suite needs at least one scene");
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SceneSpec> suite;
  for (int i = 0; i < opt.num_scenes; ++i) {
    SceneSpec spec;
    spec.length_s = opt.scene_length_s;
    spec.sample_rate_hz = opt.sample_rate_hz;
    spec.rng_seed = rng();
    EventSpec e;
    e.class_index = opt.class_index;
    e.onset_s = 0.0;
    e.duration_s = opt.scene_length_s;
    const double az = -180.0 + 360.0 * (i + unit(rng)) / opt.num_scenes;
    e.direction = {WrapAzimuth(std::round(az)), 0.0};
    e.signal = opt.signal;
    e.seed = rng();
    spec.events.push_back(e);
    suite.push_back(std::move(spec));
  }
  return suite;
}

std::vector<SceneSpec> PolyphonySuite(const PolyphonySuiteOptions& opt) {
  if (opt.profile.empty() ||
      opt.profile.size() > static_cast<size_t>(kMaxSimultaneousSources)) {
    ThrowInvalidArgument("polyphony profile needs 1 to 5 bins");
  }
  if (opt.min_segment_frames < 1 ||
      opt.max_segment_frames < opt.min_segment_frames) {
    ThrowInvalidArgument("invalid segment length range");
  }
  if (!(opt.silence_fraction >= 0.0 && opt.silence_fraction < 1.0)) {
    ThrowInvalidArgument("silence fraction must be in [0, 1)");
  }
  if (opt.num_classes < 1 || opt.num_classes > kNumClasses) {
    ThrowInvalidArgument("num_classes must be in [1, 13]");
  }
  // targets[k] is the share of all frames with k sources, k = 0 is silence.
  const double profile_sum =
      std::accumulate(opt.profile.begin(), opt.profile.end(), 0.0);
  std::vector<double> targets = {opt.silence_fraction};
  for (double p : opt.profile) {
    targets.push_back((1.0 - opt.silence_fraction) * p / profile_sum);
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> seg_dist(opt.min_segment_frames,
                                              opt.max_segment_frames);
  std::uniform_int_distribution<int> az_dist(-180, 179);
  std::uniform_int_distribution<int> class_dist(0, opt.num_classes - 1);
  std::uniform_real_distribution<double> gain_dist(opt.gain_min_db,
                                                   opt.gain_max_db);

  std::vector<long> frames_at(targets.size(), 0);
  long frames_total = 0;
  const int scene_frames = LabelFrameCount(opt.scene_length_s);
  const int num_scenes = std::max(
      1, static_cast<int>(std::ceil(opt.total_length_s / opt.scene_length_s - 1e-9)));

  std::vector<SceneSpec> suite;
  for (int s = 0; s < num_scenes; ++s) {
    SceneSpec spec;
    spec.length_s = scene_frames * kLabelFrameSeconds;
    spec.sample_rate_hz = opt.sample_rate_hz;
    spec.rng_seed = rng();
    int cursor = 0;
    while (cursor < scene_frames) {
      const int len = std::min(seg_dist(rng), scene_frames - cursor);
      // Pick the source count whose running share lags its target most.
      size_t best = 0;
      double best_deficit = -1e300;
      for (size_t k = 0; k < targets.size(); ++k) {
        const double deficit =
            targets[k] * (frames_total + len) - frames_at[k];
        if (deficit > best_deficit) {
          best_deficit = deficit;
          best = k;
        }
      }
      frames_at[best] += len;
      frames_total += len;
      std::vector<int> azimuths;
      for (size_t j = 0; j < best; ++j) {
        int az = 0;
        for (int attempt = 0; attempt < 100; ++attempt) {
          az = az_dist(rng);
          const bool clear = std::all_of(
              azimuths.begin(), azimuths.end(), [&](int other) {
                return std::fabs(WrapAzimuth(az - other)) >=
                       opt.min_separation_deg;
              });
          if (clear) break;
        }
        azimuths.push_back(az);
        EventSpec e;
        e.class_index = class_dist(rng);
        e.onset_s = cursor * kLabelFrameSeconds;
        e.duration_s = len * kLabelFrameSeconds;
        e.direction = {static_cast<double>(az), 0.0};
        e.signal = opt.signal;
        e.gain_db = gain_dist(rng);
        e.seed = rng();
        spec.events.push_back(e);
      }
      cursor += len;
    }
    suite.push_back(std::move(spec));
  }
  return suite;
}

std::vector<SceneSpec> SynmixSuite(const SynmixSuiteOptions& opt) {
  if (opt.num_scenes < 1) ThrowInvalidArgument("suite needs at least one scene");
  if (opt.num_classes < 1 || opt.num_classes > kNumClasses) {
    ThrowInvalidArgument("num_classes must be in [1, 13]");
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> gap_frames(5, 20);
  std::uniform_int_distribution<int> dur_frames(10, 40);
  std::uniform_int_distribution<int> az_dist(-180, 179);
  std::uniform_int_distribution<int> class_dist(0, opt.num_classes - 1);
  std::uniform_real_distribution<double> gain_dist(-6.0, 0.0);
  const int scene_frames = LabelFrameCount(opt.scene_length_s);
  std::vector<SceneSpec> suite;
  for (int s = 0; s < opt.num_scenes; ++s) {
    SceneSpec spec;
    spec.length_s = scene_frames * kLabelFrameSeconds;
    spec.sample_rate_hz = opt.sample_rate_hz;
    spec.rng_seed = rng();
    for (int lane = 0; lane < 2; ++lane) {
      int cursor = gap_frames(rng);
      while (cursor < scene_frames) {
        const int len = std::min(dur_frames(rng), scene_frames - cursor);
        EventSpec e;
        e.class_index = class_dist(rng);
        e.onset_s = cursor * kLabelFrameSeconds;
        e.duration_s = len * kLabelFrameSeconds;
        e.direction = {static_cast<double>(az_dist(rng)), 0.0};
        e.signal = opt.signal;
        e.gain_db = gain_dist(rng);
        e.seed = rng();
        spec.events.push_back(e);
        cursor += len + gap_frames(rng);
      }
    }
    suite.push_back(std::move(spec));
  }
  return suite;
}

}  // namespace seld
