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
#include "msr/resample.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "msr/error.hpp"

namespace msr {

namespace {

constexpr double kKaiserBeta = 14.0;   // ~100 dB stopband
constexpr int kHalfTaps = 32;          // 64-tap kernel per polyphase branch
constexpr double kCutoffFactor = 0.9;  // keeps the transition band below Nyquist

// Modified Bessel function of the first kind, order zero (power series).
double bessel_i0(double x) {
  double sum = 1.0;
  double term = 1.0;
  const double quarter_x2 = 0.25 * x * x;
  for (int k = 1; k < 64; ++k) {
    term *= quarter_x2 / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double kaiser(double t) {  // t in [-1, 1]
  const double a = 1.0 - t * t;
  if (a <= 0.0) return 0.0;
  return bessel_i0(kKaiserBeta * std::sqrt(a)) / bessel_i0(kKaiserBeta);
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

struct KernelPhase {
  std::int64_t first_tap;       // input index offset relative to floor(t)
  std::vector<double> taps;
};

}  // namespace

AudioBuffer resample(const AudioBuffer& in, int target_rate) {
  if (target_rate <= 0) {
    throw Error(ErrorKind::kValidation, "target rate must be positive");
  }
  in.validate();
  if (target_rate == in.sample_rate) return in;

  const std::int64_t src = in.sample_rate;
  const std::int64_t dst = target_rate;
  const double ratio = static_cast<double>(dst) / static_cast<double>(src);
  // Cutoff and kernel width in input-sample units. Downsampling stretches
  // the kernel so the polyphase branch keeps 64 taps at the output rate.
  const double shrink = std::min(1.0, ratio);
  const double cutoff = kCutoffFactor * shrink;
  const double half_width = kHalfTaps / shrink;
  const auto half_span = static_cast<std::int64_t>(std::ceil(half_width));

  const std::size_t in_len = in.num_frames();
  const auto out_len = static_cast<std::size_t>(
      std::llround(static_cast<double>(in_len) * ratio));

  // The fractional position pattern repeats with period dst/gcd(src,dst), so
  // tap tables are cached per phase.
  std::unordered_map<std::int64_t, KernelPhase> phases;
  phases.reserve(static_cast<std::size_t>(dst / std::gcd(src, dst)) + 1);

  AudioBuffer out(target_rate, in.num_channels(), out_len);
  for (std::size_t n = 0; n < out_len; ++n) {
    const std::int64_t t_num = static_cast<std::int64_t>(n) * src;
    const std::int64_t base = t_num / dst;
    const std::int64_t phase_num = t_num % dst;

    auto it = phases.find(phase_num);
    if (it == phases.end()) {
      const double frac = static_cast<double>(phase_num) / static_cast<double>(dst);
      KernelPhase ph;
      ph.first_tap = -half_span;
      ph.taps.resize(static_cast<std::size_t>(2 * half_span + 1));
      double sum = 0.0;
      for (std::int64_t k = -half_span; k <= half_span; ++k) {
        const double tau = static_cast<double>(k) - frac;
        const double w = kaiser(tau / half_width);
        const double v = cutoff * sinc(cutoff * tau) * w;
        ph.taps[static_cast<std::size_t>(k + half_span)] = v;
        sum += v;
      }
      // Normalize for exact unity DC gain per branch.
      for (double& v : ph.taps) v /= sum;
      it = phases.emplace(phase_num, std::move(ph)).first;
    }

    const KernelPhase& ph = it->second;
    for (int c = 0; c < in.num_channels(); ++c) {
      const auto& x = in.channels[c];
      double acc = 0.0;
      for (std::size_t k = 0; k < ph.taps.size(); ++k) {
        const std::int64_t idx = base + ph.first_tap + static_cast<std::int64_t>(k);
        if (idx >= 0 && idx < static_cast<std::int64_t>(in_len)) {
          acc += ph.taps[k] * x[static_cast<std::size_t>(idx)];
        }
      }
      out.channels[c][n] = acc;
    }
  }
  return out;
}

}  // namespace msr
