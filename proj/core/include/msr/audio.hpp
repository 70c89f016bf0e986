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
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace msr {

/// rms_db result for an all-zero window. A sentinel rather than an error so
/// that active-time scans over long quiet files never abort.
inline constexpr double kSilenceDb = -1000.0;

/// Planar multichannel audio at nominal full scale +-1.0.
///
/// Samples are stored as doubles; file I/O quantizes to the requested bit
/// depth at the WAV boundary. All channels always hold the same number of
/// frames.
struct AudioBuffer {
  int sample_rate = 0;
  std::vector<std::vector<double>> channels;

  AudioBuffer() = default;
  AudioBuffer(int rate, int num_channels, std::size_t frames)
      : sample_rate(rate),
        channels(static_cast<std::size_t>(num_channels),
                 std::vector<double>(frames, 0.0)) {}

  int num_channels() const { return static_cast<int>(channels.size()); }
  std::size_t num_frames() const {
    return channels.empty() ? 0 : channels.front().size();
  }
  double duration_seconds() const {
    return sample_rate > 0
               ? static_cast<double>(num_frames()) / sample_rate
               : 0.0;
  }

  /// Throws Error(kValidation) if channel lengths differ, the rate is not
  /// positive, or the channel count is outside {1, 2}.
  void validate() const;
};

/// Largest absolute sample across all channels; 0 for an empty buffer.
double peak_abs(const AudioBuffer& in);

/// True when every sample is exactly zero (or the buffer is empty).
bool is_silent(const AudioBuffer& in);

/// Multiplies every sample by `gain`. gain must be finite and nonzero.
AudioBuffer apply_gain(const AudioBuffer& in, double gain);

/// RMS level in dBFS over the whole buffer, channels averaged in the power
/// domain. Returns kSilenceDb for all-zero content.
double rms_db(const AudioBuffer& in);

/// RMS level in dBFS over [start_s, start_s + len_s). The window must lie
/// within the buffer and be non-empty.
double rms_db(const AudioBuffer& in, double start_s, double len_s);

/// Scales so the peak absolute sample is exactly 1.0. All-zero input is an
/// error (callers treating silence as zero active time catch it).
AudioBuffer peak_normalize(const AudioBuffer& in);

/// target + g * background with g chosen so that
/// rms_db(target) - rms_db(g * background) == snr_db.
/// Inputs must share rate, channel count and length, and be non-silent.
AudioBuffer mix_at_snr(const AudioBuffer& target, const AudioBuffer& background,
                       double snr_db);

/// Adds zero-mean Gaussian noise with the given standard deviation,
/// deterministically for a fixed seed. Channels get independent noise.
AudioBuffer add_gaussian_noise(const AudioBuffer& in, double sigma,
                               std::uint64_t seed);

/// Average of all channels as a mono buffer.
AudioBuffer mono_mix(const AudioBuffer& in);

/// Mono -> stereo by duplication; stereo passes through unchanged.
AudioBuffer upmix_to_stereo(const AudioBuffer& in);

}  // namespace msr
