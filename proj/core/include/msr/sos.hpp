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

#include <vector>

#include "msr/audio.hpp"

namespace msr {

/// One second-order section, a0 normalized to 1:
///   H(z) = (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2)
struct BiquadCoeffs {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;

  /// Largest pole magnitude of this section.
  double max_pole_radius() const;
  bool is_stable() const { return max_pole_radius() < 1.0; }
};

/// Cascade of second-order sections with an overall linear gain.
/// An empty chain is the identity with gain 1.
struct SosChain {
  std::vector<BiquadCoeffs> sections;
  double overall_gain = 1.0;

  /// Throws Error(kProcessing) if any section has non-finite coefficients
  /// or poles on/outside the unit circle.
  void validate() const;

  /// Concatenation of two cascades; gains multiply.
  SosChain then(const SosChain& next) const;
};

/// Runs the cascade over every channel (transposed direct-form II, zero
/// initial state, double-precision state). Output length equals input length.
AudioBuffer process_sos(const SosChain& chain, const AudioBuffer& in);

/// Magnitude response in dB at the given frequencies, evaluated exactly
/// from the coefficients at z = e^{j 2 pi f / fs}.
std::vector<double> frequency_response(const SosChain& chain,
                                       const std::vector<double>& freqs_hz,
                                       double sample_rate);

}  // namespace msr
