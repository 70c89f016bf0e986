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
#include "msr/sos.hpp"

#include <cmath>
#include <complex>

#include "msr/error.hpp"

namespace msr {

double BiquadCoeffs::max_pole_radius() const {
  // Roots of z^2 + a1 z + a2.
  const std::complex<double> disc =
      std::sqrt(std::complex<double>(a1 * a1 - 4.0 * a2, 0.0));
  const std::complex<double> r1 = (-a1 + disc) / 2.0;
  const std::complex<double> r2 = (-a1 - disc) / 2.0;
  return std::max(std::abs(r1), std::abs(r2));
}

void SosChain::validate() const {
  if (!std::isfinite(overall_gain)) {
    throw Error(ErrorKind::kProcessing, "non-finite chain gain");
  }
  for (const auto& s : sections) {
    for (double c : {s.b0, s.b1, s.b2, s.a1, s.a2}) {
      if (!std::isfinite(c)) {
        throw Error(ErrorKind::kProcessing, "non-finite SOS coefficient");
      }
    }
    if (!s.is_stable()) {
      throw Error(ErrorKind::kProcessing, "unstable SOS section");
    }
  }
}

SosChain SosChain::then(const SosChain& next) const {
  SosChain out = *this;
  out.sections.insert(out.sections.end(), next.sections.begin(),
                      next.sections.end());
  out.overall_gain *= next.overall_gain;
  return out;
}

AudioBuffer process_sos(const SosChain& chain, const AudioBuffer& in) {
  AudioBuffer out = in;
  for (auto& x : out.channels) {
    if (chain.overall_gain != 1.0) {
      for (double& s : x) s *= chain.overall_gain;
    }
    for (const auto& sec : chain.sections) {
      double s1 = 0.0, s2 = 0.0;
      for (double& sample : x) {
        const double xn = sample;
        const double yn = sec.b0 * xn + s1;
        s1 = sec.b1 * xn - sec.a1 * yn + s2;
        s2 = sec.b2 * xn - sec.a2 * yn;
        sample = yn;
      }
    }
  }
  return out;
}

std::vector<double> frequency_response(const SosChain& chain,
                                       const std::vector<double>& freqs_hz,
                                       double sample_rate) {
  std::vector<double> mags_db;
  mags_db.reserve(freqs_hz.size());
  for (double f : freqs_hz) {
    const double w = 2.0 * M_PI * f / sample_rate;
    const std::complex<double> z1 = std::polar(1.0, -w);
    const std::complex<double> z2 = z1 * z1;
    std::complex<double> h(chain.overall_gain, 0.0);
    for (const auto& s : chain.sections) {
      h *= (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
    }
    const double mag = std::abs(h);
    mags_db.push_back(mag > 0.0 ? 20.0 * std::log10(mag) : -2000.0);
  }
  return mags_db;
}

}  // namespace msr
