/*
 * Copyright 2026 the rdftfb authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <string>
#include <vector>

namespace rdftfb {

/// Lowpass prototype requirements for an N-subband bank.
///
/// All frequencies are normalized to half the sampling rate: 1.0 is the
/// Nyquist frequency. The prototype of an N-subband bank nominally covers
/// 1/N of that range.
struct FilterSpec {
  double passband_edge = 0.0;      ///< end of the flat passband, in (0,1)
  double stopband_edge = 0.0;      ///< start of the stopband, in (0,1)
  double passband_ripple_db = 0.0; ///< max |deviation| from 0 dB in the passband
  double stopband_atten_db = 0.0;  ///< min attenuation at and beyond the stopband edge
  int num_subbands = 0;            ///< N >= 2

  double transition_width() const { return stopband_edge - passband_edge; }
  /// Design cutoff, centered in the transition band.
  double cutoff() const { return 0.5 * (passband_edge + stopband_edge); }

  /// Throws Error(infeasible) when the edges or tolerances are unusable.
  void validate() const;

  /// Non-fatal consistency notes, e.g. a transition band that is not
  /// centered on the nominal 1/N prototype bandwidth.
  std::vector<std::string> warnings() const;

  /// Spec with the transition band centered on the 1/N nominal edge:
  /// passband_edge = 1/N - width/2, stopband_edge = 1/N + width/2.
  static FilterSpec for_subbands(int num_subbands, double transition_width,
                                 double passband_ripple_db,
                                 double stopband_atten_db);
};

}  // namespace rdftfb
