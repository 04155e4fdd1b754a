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

#include <iosfwd>
#include <string>

#include "rdftfb/filter_spec.hpp"
#include "rdftfb/prototype_filter.hpp"

namespace rdftfb {

struct KaiserOptions {
  int max_length = 4096;   ///< design gives up past this many taps
  int grid_points = 4096;  ///< verification grid density
};

/// Zeroth-order modified Bessel function of the first kind (series).
double kaiser_bessel_i0(double x);

/// Kaiser window shape parameter for the given design attenuation.
double kaiser_beta(double atten_db);

/// Classic Kaiser tap-count estimate:
///   L = ceil((A - 7.95) / (2.285 * transition * pi)) + 1
/// where A covers both the stopband attenuation and the attenuation
/// implied by the passband deviation limit.
int estimate_kaiser_length(const FilterSpec& spec);

/// Measured performance of a coefficient set against a spec.
struct SpecCheck {
  double passband_deviation_db = 0.0;  ///< max |20log10|H|| over the passband
  double stopband_atten_db = 0.0;      ///< -max mag_db at/beyond the stopband edge
  double edge_minus6db = 0.0;          ///< measured -6 dB edge
  bool passband_ok = false;
  bool stopband_ok = false;
  bool pass() const { return passband_ok && stopband_ok; }
};

SpecCheck verify_spec(const PrototypeFilter& filter, const FilterSpec& spec,
                      int grid_points = 4096);

/// Kaiser-window lowpass design. The returned filter is exactly symmetric,
/// has unit DC gain, and has been measured to meet the FilterSpec (the tap count
/// is grown from the estimate until the measured response passes).
/// Throws Error(infeasible) when no length up to max_length works.
PrototypeFilter design_kaiser(const FilterSpec& spec,
                              const KaiserOptions& options = {});

/// Coefficient file format: one decimal value per line, '#' starts a
/// comment, blank lines ignored. Non-symmetric input is accepted (the
/// symmetric flag is simply left false); empty files, non-numeric tokens
/// and non-finite values raise Error(parse) naming the line.
///
/// A comment of the form `# nominal_bandwidth = <value>` carries the
/// design bandwidth across save/load; files without it fall back to the
/// measured -6 dB edge.
PrototypeFilter load_coefficients(std::istream& in);
PrototypeFilter load_coefficients_file(const std::string& path);

/// Writes the exact coefficients back out (round-trip safe digits).
void save_coefficients(const PrototypeFilter& filter, std::ostream& out,
                       const std::string& header_comment = {});
void save_coefficients_file(const PrototypeFilter& filter,
                            const std::string& path,
                            const std::string& header_comment = {});

}  // namespace rdftfb
