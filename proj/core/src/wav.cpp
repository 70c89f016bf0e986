/*
 * Copyright 2026 The MSR Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "msr/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "msr/error.hpp"

namespace msr {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatIeeeFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t read_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
}

void put_tag(std::vector<std::uint8_t>& out, const char tag[4]) {
  out.insert(out.end(), tag, tag + 4);
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::kFormat, "malformed RIFF/WAVE file: " + what);
}

}  // namespace

AudioBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw Error(ErrorKind::kIo, "cannot open WAV file: " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  if (bytes.size() < 12) malformed("file shorter than RIFF header");
  if (std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    malformed("missing RIFF/WAVE magic");
  }

  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t rate = 0;
  std::uint16_t bits = 0;
  bool have_fmt = false;
  const std::uint8_t* data = nullptr;
  std::size_t data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* tag = reinterpret_cast<const char*>(bytes.data() + pos);
    const std::uint32_t chunk_len = read_u32(bytes.data() + pos + 4);
    pos += 8;
    if (pos + chunk_len > bytes.size()) malformed("chunk overruns file");
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_len < 16) malformed("fmt chunk too short");
      const std::uint8_t* p = bytes.data() + pos;
      format = read_u16(p);
      channels = read_u16(p + 2);
      rate = read_u32(p + 4);
      bits = read_u16(p + 14);
      if (format == kFormatExtensible) {
        if (chunk_len < 40) malformed("extensible fmt chunk too short");
        // First two bytes of the SubFormat GUID carry the actual format tag.
        format = read_u16(p + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      data = bytes.data() + pos;
      data_len = chunk_len;
    }
    pos += chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data == nullptr) malformed("missing fmt or data chunk");
  if (channels == 0 || rate == 0) malformed("zero channel count or sample rate");

  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool pcm24 = format == kFormatPcm && bits == 24;
  const bool f32 = format == kFormatIeeeFloat && bits == 32;
  if (!pcm16 && !pcm24 && !f32) {
    throw Error(ErrorKind::kFormat,
                "unsupported WAV encoding (format tag " + std::to_string(format) +
                    ", " + std::to_string(bits) + " bits): " + path.string());
  }

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t frame_bytes = bytes_per_sample * channels;
  const std::size_t frames = data_len / frame_bytes;

  AudioBuffer out(static_cast<int>(rate), channels, frames);
  for (std::size_t i = 0; i < frames; ++i) {
    for (std::uint16_t c = 0; c < channels; ++c) {
      const std::uint8_t* p = data + i * frame_bytes + c * bytes_per_sample;
      double v = 0.0;
      if (pcm16) {
        auto s = static_cast<std::int16_t>(read_u16(p));
        v = static_cast<double>(s) / 32768.0;
      } else if (pcm24) {
        std::int32_t s = (static_cast<std::int32_t>(p[0]) |
                          (static_cast<std::int32_t>(p[1]) << 8) |
                          (static_cast<std::int32_t>(p[2]) << 16));
        if (s & 0x800000) s |= static_cast<std::int32_t>(0xFF000000);
        v = static_cast<double>(s) / 8388608.0;
      } else {
        std::uint32_t u = read_u32(p);
        float fl;
        std::memcpy(&fl, &u, 4);
        v = static_cast<double>(fl);
      }
      out.channels[c][i] = v;
    }
  }
  return out;
}

void write_wav(const AudioBuffer& buffer, const std::filesystem::path& path,
               WavBitDepth depth) {
  buffer.validate();
  for (const auto& ch : buffer.channels) {
    for (double s : ch) {
      if (!std::isfinite(s)) {
        throw Error(ErrorKind::kValidation,
                    "buffer contains NaN/Inf samples: " + path.string());
      }
    }
  }

  const int channels = buffer.num_channels();
  const std::size_t frames = buffer.num_frames();
  const int bits = depth == WavBitDepth::kPcm16 ? 16
                   : depth == WavBitDepth::kPcm24 ? 24
                                                  : 32;
  const std::uint16_t format =
      depth == WavBitDepth::kFloat32 ? kFormatIeeeFloat : kFormatPcm;
  const std::size_t bytes_per_sample = static_cast<std::size_t>(bits) / 8;
  const std::size_t data_len = frames * channels * bytes_per_sample;

  std::vector<std::uint8_t> out;
  out.reserve(data_len + 64);
  put_tag(out, "RIFF");
  const std::size_t fmt_len = format == kFormatIeeeFloat ? 18 : 16;
  // RIFF size = "WAVE" + fmt chunk + (fact for float) + data chunk
  std::size_t riff_size = 4 + (8 + fmt_len) + (8 + data_len);
  if (format == kFormatIeeeFloat) riff_size += 8 + 4;
  put_u32(out, static_cast<std::uint32_t>(riff_size));
  put_tag(out, "WAVE");

  put_tag(out, "fmt ");
  put_u32(out, static_cast<std::uint32_t>(fmt_len));
  put_u16(out, format);
  put_u16(out, static_cast<std::uint16_t>(channels));
  put_u32(out, static_cast<std::uint32_t>(buffer.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(buffer.sample_rate * channels *
                                          bytes_per_sample));
  put_u16(out, static_cast<std::uint16_t>(channels * bytes_per_sample));
  put_u16(out, static_cast<std::uint16_t>(bits));
  if (format == kFormatIeeeFloat) {
    put_u16(out, 0);  // cbSize
    put_tag(out, "fact");
    put_u32(out, 4);
    put_u32(out, static_cast<std::uint32_t>(frames));
  }

  put_tag(out, "data");
  put_u32(out, static_cast<std::uint32_t>(data_len));
  for (std::size_t i = 0; i < frames; ++i) {
    for (int c = 0; c < channels; ++c) {
      const double v = buffer.channels[c][i];
      if (depth == WavBitDepth::kPcm16) {
        double scaled = std::round(v * 32768.0);
        scaled = std::clamp(scaled, -32768.0, 32767.0);
        put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
      } else if (depth == WavBitDepth::kPcm24) {
        double scaled = std::round(v * 8388608.0);
        scaled = std::clamp(scaled, -8388608.0, 8388607.0);
        auto s = static_cast<std::int32_t>(scaled);
        out.push_back(static_cast<std::uint8_t>(s & 0xFF));
        out.push_back(static_cast<std::uint8_t>((s >> 8) & 0xFF));
        out.push_back(static_cast<std::uint8_t>((s >> 16) & 0xFF));
      } else {
        auto fl = static_cast<float>(v);
        std::uint32_t u;
        std::memcpy(&u, &fl, 4);
        put_u32(out, u);
      }
    }
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw Error(ErrorKind::kIo, "cannot open for writing: " + path.string());
  }
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) {
    throw Error(ErrorKind::kIo, "short write: " + path.string());
  }
}

}  // namespace msr
