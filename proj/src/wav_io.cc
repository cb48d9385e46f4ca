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

#include "seld/wav_io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "seld/error.h"

namespace seld {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint16_t ReadU16(const uint8_t* p) { return p[0] | (p[1] << 8); }
uint32_t ReadU32(const uint8_t* p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

void PutU16(std::string& s, uint16_t v) {
  s.push_back(static_cast<char>(v & 0xFF));
  s.push_back(static_cast<char>(v >> 8));
}
void PutU32(std::string& s, uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

}  // namespace

AudioData ReadWav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowIoError("cannot open " + path.string());
  const std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  const std::string name = path.string();
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    ThrowDataError(name + ": not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  uint16_t format = 0;
  uint16_t channels = 0;
  uint32_t rate = 0;
  uint16_t bits = 0;
  const uint8_t* data = nullptr;
  size_t data_size = 0;
  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t* chunk = bytes.data() + pos;
    const uint32_t size = ReadU32(chunk + 4);
    const size_t body = pos + 8;
    if (size > bytes.size() - body) {
      // Tolerate a data chunk whose declared size overruns the file.
      if (std::memcmp(chunk, "data", 4) != 0) {
        ThrowDataError(name + ": chunk extends past end of file");
      }
    }
    const size_t avail = std::min<size_t>(size, bytes.size() - body);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (avail < 16) ThrowDataError(name + ": fmt chunk too short");
      format = ReadU16(chunk + 8);
      channels = ReadU16(chunk + 10);
      rate = ReadU32(chunk + 12);
      bits = ReadU16(chunk + 22);
      if (format == kFormatExtensible) {
        if (avail < 40) ThrowDataError(name + ": extensible fmt chunk too short");
        format = ReadU16(chunk + 32);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = chunk + 8;
      data_size = avail;
    }
    pos = body + avail + (avail & 1);
  }
  if (!have_fmt) ThrowDataError(name + ": missing fmt chunk");
  if (data == nullptr) ThrowDataError(name + ": missing data chunk");
  if (channels < 1 || channels > kMaxWavChannels) {
    ThrowDataError(name + ": " + std::to_string(channels) +
                   " channels (1 to 4 supported)");
  }
  if (rate == 0) ThrowDataError(name + ": zero sample rate");

  AudioData audio;
  audio.sample_rate_hz = static_cast<int>(rate);
  if (format == kFormatPcm && bits == 16) {
    audio.format = SampleFormat::kPcm16;
  } else if (format == kFormatFloat && bits == 32) {
    audio.format = SampleFormat::kFloat32;
  } else {
    ThrowDataError(name + ": unsupported codec (format " +
                   std::to_string(format) + ", " + std::to_string(bits) +
                   " bits); only PCM16 and float32 are supported");
  }
  const size_t width = bits / 8;
  const size_t frames = data_size / (width * channels);
  audio.channels.assign(channels, std::vector<double>(frames));
  for (size_t n = 0; n < frames; ++n) {
    for (int c = 0; c < channels; ++c) {
      const uint8_t* p = data + (n * channels + c) * width;
      if (audio.format == SampleFormat::kPcm16) {
        audio.channels[c][n] = static_cast<int16_t>(ReadU16(p)) / 32768.0;
      } else {
        const uint32_t u = ReadU32(p);
        float f;
        std::memcpy(&f, &u, sizeof(f));
        audio.channels[c][n] = f;
      }
    }
  }
  return audio;
}

void WriteWav(const std::filesystem::path& path, const AudioData& audio,
              SampleFormat format) {
  const int channels = audio.num_channels();
  if (channels < 1 || channels > kMaxWavChannels) {
    ThrowInvalidArgument("WAV output needs 1 to 4 channels");
  }
  if (audio.sample_rate_hz <= 0) ThrowInvalidArgument("sample rate must be > 0");
  const size_t frames = audio.num_samples();
  for (const auto& ch : audio.channels) {
    if (ch.size() != frames) ThrowInvalidArgument("channel lengths differ");
  }
  const bool pcm = format == SampleFormat::kPcm16;
  const uint16_t width = pcm ? 2 : 4;
  const uint64_t data_size = static_cast<uint64_t>(frames) * channels * width;
  if (data_size > 0xFFFFFFFFull - 36) {
    ThrowInvalidArgument("audio too long for a RIFF file");
  }

  std::string buf;
  buf.reserve(44 + data_size);
  buf += "RIFF";
  PutU32(buf, static_cast<uint32_t>(36 + data_size));
  buf += "WAVEfmt ";
  PutU32(buf, 16);
  PutU16(buf, pcm ? kFormatPcm : kFormatFloat);
  PutU16(buf, static_cast<uint16_t>(channels));
  PutU32(buf, static_cast<uint32_t>(audio.sample_rate_hz));
  PutU32(buf, static_cast<uint32_t>(audio.sample_rate_hz) * channels * width);
  PutU16(buf, static_cast<uint16_t>(channels * width));
  PutU16(buf, static_cast<uint16_t>(8 * width));
  buf += "data";
  PutU32(buf, static_cast<uint32_t>(data_size));
  for (size_t n = 0; n < frames; ++n) {
    for (int c = 0; c < channels; ++c) {
      const double x = audio.channels[c][n];
      if (pcm) {
        const double q = std::clamp(std::round(x * 32768.0), -32768.0, 32767.0);
        PutU16(buf, static_cast<uint16_t>(static_cast<int16_t>(q)));
      } else {
        const float f = static_cast<float>(x);
        uint32_t u;
        std::memcpy(&u, &f, sizeof(u));
        PutU32(buf, u);
      }
    }
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) ThrowIoError("cannot open " + path.string() + " for writing");
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) ThrowIoError("failed writing " + path.string());
}

FoaBuffer ToFoa(const AudioData& audio) {
  if (audio.num_channels() != kNumFoaChannels) {
    ThrowDataError("FOA input needs 4 channels, got " +
                   std::to_string(audio.num_channels()));
  }
  std::array<std::vector<double>, kNumFoaChannels> ch;
  for (int c = 0; c < kNumFoaChannels; ++c) ch[c] = audio.channels[c];
  return FoaBuffer(std::move(ch), audio.sample_rate_hz);
}

StereoBuffer ToStereo(const AudioData& audio) {
  if (audio.num_channels() != 2) {
    ThrowDataError("two-channel input needs 2 channels, got " +
                   std::to_string(audio.num_channels()));
  }
  return {audio.channels[0], audio.channels[1], audio.sample_rate_hz};
}

AudioData FromFoa(const FoaBuffer& foa) {
  AudioData a;
  a.sample_rate_hz = foa.sample_rate_hz();
  for (const auto& ch : foa.channels()) a.channels.push_back(ch);
  return a;
}

AudioData FromStereo(const StereoBuffer& stereo) {
  AudioData a;
  a.sample_rate_hz = stereo.sample_rate_hz;
  a.channels = {stereo.left, stereo.right};
  return a;
}

}  // namespace seld
