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
#include <cstdint>
#include <span>
#include <vector>

#include "rdftfb/cdm.hpp"
#include "rdftfb/polyphase.hpp"

namespace rdftfb {

/// One full-rate output frame: the N subband samples for one input sample.
struct SubbandFrame {
  std::vector<std::complex<double>> outputs;
  std::uint64_t sample_index = 0;
};

/// Streaming reconfigurable channelizer.
///
/// Subband k has impulse response g[n]*exp(+j*2*pi*k*n/N), where g is the
/// active (possibly coefficient-decimated) prototype. Frames are computed
/// through the polyphase branches and the N x N modulation matrix, not the
/// direct convolution sum.
///
/// The bank is shared and immutable; a Channelizer instance owns its delay
/// line and must be driven from one thread at a time.
class Channelizer {
 public:
  Channelizer(PolyphaseBank bank, CdmConfig config);

  const PolyphaseBank& bank() const { return bank_; }
  int decimation() const { return config_.factor; }
  int max_decimation() const { return config_.max_factor; }

  /// Switches the active coefficient selection. The stored prototype and
  /// the delay-line contents are untouched; only the per-slot selection
  /// changes. On error the state is left unchanged.
  void set_decimation(int factor);

  /// Clears the delay line and the sample counter.
  void reset();

  /// Consumes one input sample, produces the N subband outputs.
  /// Rejects non-finite samples with Error(input).
  SubbandFrame process(std::complex<double> x);

  std::vector<SubbandFrame> process_block(
      std::span<const std::complex<double>> samples);

 private:
  PolyphaseBank bank_;
  CdmConfig config_;
  /// slot_tables_[f-1][i*branch_len + m] = coeffs[(i + m*N) * f], or 0
  /// past the decimated length: the stride-M selection the reconfiguration
  /// network realizes.
  std::vector<std::vector<double>> slot_tables_;
  std::vector<std::complex<double>> history_;  ///< ring buffer, length N*branch_len
  std::size_t head_ = 0;
  std::uint64_t sample_index_ = 0;
};

/// Brute-force subband filter y_k[n] = sum_i g[i] e^{j 2 pi k i / N} x[n-i].
/// O(len(g) * len(x)); the independent reference the structured path is
/// checked against.
std::vector<std::complex<double>> reference_subband(
    std::span<const std::complex<double>> x, std::span<const double> coeffs,
    int subband, int num_subbands);

/// End-to-end response of subband k under decimation factor m, evaluated
/// on the uniform [0,1] grid. Subbands centered above Nyquist (k > N/2)
/// are evaluated on the negative-frequency half so the passband appears
/// at its folded location min(2k/N, 2-2k/N); for real prototypes this
/// mirrors the response of subband N-k exactly.
FrequencyResponse subband_response(const PrototypeFilter& prototype,
                                   int num_subbands, int subband, int factor,
                                   int num_points);

/// Band measurement taken on a +-1 window rotated to the subband's
/// nominal center 2k/N on the frequency circle. The aliasing bound keeps
/// even the widest legal subband narrower than the window, so both
/// crossings always exist there.
struct SubbandMeasurement {
  double center = 0.0;   ///< edge midpoint folded into [0,1]
  double width = 0.0;    ///< two-sided level-crossing width
  double peak_db = 0.0;  ///< peak gain (decimation scales it by ~1/M)
};

SubbandMeasurement measure_subband(const PrototypeFilter& prototype,
                                   int num_subbands, int subband, int factor,
                                   int num_points, double level_db = -6.0);

/// Center frequency of subband k: the midpoint of the -6 dB band around
/// the response peak (robust against ripple in the flat passband),
/// reported at its folded location in [0,1].
double measure_center_frequency(const PolyphaseBank& bank, int subband,
                                int factor, int num_points);

/// Two-sided level-crossing width of subband k's response.
double subband_width(const PrototypeFilter& prototype, int num_subbands,
                     int subband, int factor, int num_points,
                     double level_db = -6.0);

}  // namespace rdftfb
