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
#include "msr/audio.hpp"

#include <cmath>
#include <string>

#include "msr/error.hpp"
#include "msr/rng.hpp"

namespace msr {

void AudioBuffer::validate() const {
  if (sample_rate <= 0) {
    throw Error(ErrorKind::kValidation, "sample rate must be positive");
  }
  if (channels.empty() || channels.size() > 2) {
    throw Error(ErrorKind::kValidation,
                "channel count must be 1 or 2, got " +
                    std::to_string(channels.size()));
  }
  const std::size_t len = channels.front().size();
  for (const auto& ch : channels) {
    if (ch.size() != len) {
      throw Error(ErrorKind::kValidation, "channel lengths differ");
    }
  }
}

double peak_abs(const AudioBuffer& in) {
  double peak = 0.0;
  for (const auto& ch : in.channels) {
    for (double s : ch) {
      peak = std::max(peak, std::fabs(s));
    }
  }
  return peak;
}

bool is_silent(const AudioBuffer& in) {
  for (const auto& ch : in.channels) {
    for (double s : ch) {
      if (s != 0.0) return false;
    }
  }
  return true;
}

AudioBuffer apply_gain(const AudioBuffer& in, double gain) {
  if (gain == 0.0 || !std::isfinite(gain)) {
    throw Error(ErrorKind::kValidation, "gain must be finite and nonzero");
  }
  AudioBuffer out = in;
  for (auto& ch : out.channels) {
    for (double& s : ch) s *= gain;
  }
  return out;
}

namespace {

double mean_power(const AudioBuffer& in, std::size_t start, std::size_t len) {
  double acc = 0.0;
  for (const auto& ch : in.channels) {
    for (std::size_t i = start; i < start + len; ++i) {
      acc += ch[i] * ch[i];
    }
  }
  return acc / (static_cast<double>(len) * in.num_channels());
}

}  // namespace

double rms_db(const AudioBuffer& in) {
  if (in.num_frames() == 0) {
    throw Error(ErrorKind::kValidation, "rms_db of empty buffer");
  }
  return rms_db(in, 0.0, in.duration_seconds());
}

double rms_db(const AudioBuffer& in, double start_s, double len_s) {
  const auto start = static_cast<std::size_t>(std::llround(start_s * in.sample_rate));
  const auto len = static_cast<std::size_t>(std::llround(len_s * in.sample_rate));
  if (len == 0 || start + len > in.num_frames()) {
    throw Error(ErrorKind::kValidation, "rms_db window empty or out of bounds");
  }
  const double p = mean_power(in, start, len);
  if (p == 0.0) return kSilenceDb;
  return 10.0 * std::log10(p);
}

AudioBuffer peak_normalize(const AudioBuffer& in) {
  const double peak = peak_abs(in);
  if (peak == 0.0) {
    throw Error(ErrorKind::kProcessing, "peak_normalize of all-zero buffer");
  }
  return apply_gain(in, 1.0 / peak);
}

AudioBuffer mix_at_snr(const AudioBuffer& target, const AudioBuffer& background,
                       double snr_db) {
  if (target.sample_rate != background.sample_rate ||
      target.num_channels() != background.num_channels() ||
      target.num_frames() != background.num_frames()) {
    throw Error(ErrorKind::kValidation,
                "mix_at_snr inputs must match in rate, channels and length");
  }
  const double pt = mean_power(target, 0, target.num_frames());
  const double pb = mean_power(background, 0, background.num_frames());
  if (pt == 0.0 || pb == 0.0) {
    throw Error(ErrorKind::kValidation,
                "mix_at_snr requires non-silent target and background");
  }
  // snr = rms_db(target) - rms_db(g*background)  =>  g = 10^(-snr/20) * rms_t/rms_b
  const double g = std::pow(10.0, -snr_db / 20.0) * std::sqrt(pt / pb);
  AudioBuffer out = target;
  for (int c = 0; c < out.num_channels(); ++c) {
    const auto& bg = background.channels[c];
    auto& dst = out.channels[c];
    for (std::size_t i = 0; i < dst.size(); ++i) {
      dst[i] += g * bg[i];
    }
  }
  return out;
}

AudioBuffer add_gaussian_noise(const AudioBuffer& in, double sigma,
                               std::uint64_t seed) {
  if (sigma < 0.0 || !std::isfinite(sigma)) {
    throw Error(ErrorKind::kValidation, "noise sigma must be non-negative");
  }
  AudioBuffer out = in;
  if (sigma == 0.0) return out;
  Rng rng(seed);
  for (auto& ch : out.channels) {
    for (double& s : ch) {
      s += sigma * rng.gaussian();
    }
  }
  return out;
}

AudioBuffer mono_mix(const AudioBuffer& in) {
  if (in.num_channels() == 1) return in;
  AudioBuffer out(in.sample_rate, 1, in.num_frames());
  const double scale = 1.0 / in.num_channels();
  for (const auto& ch : in.channels) {
    for (std::size_t i = 0; i < ch.size(); ++i) {
      out.channels[0][i] += ch[i] * scale;
    }
  }
  return out;
}

AudioBuffer upmix_to_stereo(const AudioBuffer& in) {
  if (in.num_channels() == 2) return in;
  AudioBuffer out = in;
  out.channels.push_back(in.channels.front());
  return out;
}

}  // namespace msr
