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

#include <filesystem>

#include "msr/audio.hpp"

namespace msr {

enum class WavBitDepth {
  kPcm16,
  kPcm24,
  kFloat32,
};

/// Reads a RIFF/WAVE file holding 16/24-bit PCM or 32-bit IEEE float data.
/// Integer PCM is scaled to [-1, 1). Errors are reported distinctly:
/// missing file (kIo), malformed RIFF structure (kFormat), unsupported
/// encoding (kFormat with the codec named).
AudioBuffer read_wav(const std::filesystem::path& path);

/// Writes the buffer at the requested depth. Float32 round-trips exactly
/// through read_wav for float32-representable samples; integer depths
/// quantize with rounding and clamp to full scale. Buffers containing
/// NaN/Inf are rejected.
void write_wav(const AudioBuffer& buffer, const std::filesystem::path& path,
               WavBitDepth depth);

}  // namespace msr
