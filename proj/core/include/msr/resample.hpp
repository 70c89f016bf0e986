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

#include "msr/audio.hpp"

namespace msr {

/// Band-limited sample-rate conversion with a Kaiser-windowed sinc kernel
/// (beta = 14, 64 taps per polyphase branch). Content above the smaller
/// Nyquist is attenuated by well over 60 dB. Output length is
/// round(input_length * target / source). Identity rates return a copy.
AudioBuffer resample(const AudioBuffer& in, int target_rate);

}  // namespace msr
