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

#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "msr/sos.hpp"

namespace msr {

enum class FilterFamily {
  kButterworth,
  kChebyshev1,
  kChebyshev2,
  kElliptic,
  kBessel,
};

enum class FilterKind {
  kLowpass,
  kHighpass,
  kBandpass,
  kBandstop,
};

const char* to_string(FilterFamily family);
const char* to_string(FilterKind kind);
FilterFamily filter_family_from_string(const std::string& s);
FilterKind filter_kind_from_string(const std::string& s);

/// Full specification of one IIR design. Band kinds use [cutoff_hz,
/// cutoff2_hz]; ripple applies to Chebyshev I / elliptic, attenuation to
/// Chebyshev II / elliptic. For Chebyshev II the cutoff is the stopband
/// edge (the conventional meaning).
struct FilterDesignSpec {
  FilterFamily family = FilterFamily::kButterworth;
  FilterKind kind = FilterKind::kLowpass;
  int order = 2;  // even, in [2, 8]
  double cutoff_hz = 1000.0;
  double cutoff2_hz = 0.0;  // upper edge, band kinds only
  double passband_ripple_db = 1.0;
  double stopband_atten_db = 40.0;

  void validate(double sample_rate) const;
};

/// Normalized analog lowpass prototype (cutoff 1 rad/s) in zero-pole-gain
/// form. passband_edge/stopband_edge give the prototype frequencies (as
/// ratios of the unit cutoff) where that family's passband ends and its
/// equiripple stopband begins; NaN where the family defines no such edge.
struct AnalogPrototype {
  std::vector<std::complex<double>> zeros;
  std::vector<std::complex<double>> poles;
  double gain = 1.0;
  double passband_edge = std::numeric_limits<double>::quiet_NaN();
  double stopband_edge = std::numeric_limits<double>::quiet_NaN();
};

/// Designs the analog lowpass prototype for one family.
///
/// Butterworth poles sit on the unit circle; Chebyshev I hits the exact
/// passband ripple, Chebyshev II the exact stopband floor (with the unit
/// cutoff as stopband edge), and the elliptic design both, with its Jacobi
/// elliptic functions evaluated through Landen transformations. Bessel
/// poles are the roots of the reverse Bessel polynomial rescaled so the
/// unit cutoff is the -3 dB point.
AnalogPrototype design_prototype(FilterFamily family, int order,
                                 double ripple_db, double atten_db);

/// Lowpass-to-{LP,HP,BP,BS} spectral transformation followed by the
/// frequency pre-warped bilinear transform, paired into stable second-order
/// sections. f2_hz is ignored for non-band kinds. Cutoffs must be below
/// Nyquist.
SosChain bilinear_to_sos(const AnalogPrototype& prototype, FilterKind kind,
                         double f1_hz, double f2_hz, double sample_rate);

/// design_prototype + bilinear_to_sos for a full spec.
SosChain design_filter(const FilterDesignSpec& spec, double sample_rate);

/// Analog frequency (rad/s) the bilinear transform maps onto digital
/// frequency f_hz, and its inverse. Exposed for response verification.
double prewarp(double f_hz, double sample_rate);
double unwarp(double omega_analog, double sample_rate);

}  // namespace msr
