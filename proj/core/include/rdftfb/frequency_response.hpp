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

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

namespace rdftfb {

/// Sampled transfer function H(f) on normalized frequencies f in [0,1]
/// (1.0 = Nyquist). H(f) = sum_n c[n] * exp(-j*pi*f*n).
struct FrequencyResponse {
  /// Zero-magnitude points are clamped to this floor so CSV output and
  /// dB arithmetic stay finite.
  static constexpr double kMagnitudeFloorDb = -300.0;

  std::vector<double> grid;                   ///< strictly increasing, in [0,1]
  std::vector<std::complex<double>> values;   ///< same length as grid
  std::vector<double> magnitude_db;           ///< 20*log10|value|, floored

  std::size_t size() const { return grid.size(); }

  /// Builds the derived magnitude column and validates the grid.
  static FrequencyResponse from_values(std::vector<double> grid,
                                       std::vector<std::complex<double>> values);
};

/// Uniform num_points-point evaluation on [0,1] for real coefficients.
/// num_points must be at least 2.
FrequencyResponse frequency_response(std::span<const double> coeffs,
                                     int num_points);

/// Same evaluation for complex coefficient sets (modulated subband
/// filters). With mirrored=true the negative-frequency half is sampled
/// instead: H(-f) over the same grid, which folds passbands above Nyquist
/// back into [0,1].
FrequencyResponse frequency_response(std::span<const std::complex<double>> coeffs,
                                     int num_points, bool mirrored = false);

/// Level-crossing edges of a response around its magnitude peak.
struct BandEdges {
  double low = 0.0;        ///< falling crossing left of the peak (grid start if none)
  double high = 0.0;       ///< falling crossing right of the peak (grid end if none)
  bool found_low = false;  ///< true when the left crossing exists
  bool found_high = false; ///< true when the right crossing exists
  double width() const { return high - low; }
};

/// Finds where the magnitude first falls level_db below the peak on each
/// side of it, with linear interpolation between grid points. level_db
/// must be negative; levels are measured relative to the peak magnitude.
/// Throws Error(not_found) when the level is never crossed on either side
/// (e.g. an all-pass response).
BandEdges measure_edges(const FrequencyResponse& resp, double level_db);

/// CSV export: header `freq,real,imag,mag_db`, 12 significant digits.
void write_csv(const FrequencyResponse& resp, std::ostream& out);

}  // namespace rdftfb
