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
#include "rdftfb/channelizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rdftfb/errors.hpp"

namespace rdftfb {

namespace {

/// Per-slot coefficient table for one decimation factor: slot (branch i,
/// tap m) carries coeffs[(i + m*N) * f] when that index is retained,
/// otherwise 0. Decimate-then-decompose equals this strided selection.
std::vector<double> slot_table(const PrototypeFilter& prototype, int n,
                               int branch_len, int factor) {
  const std::size_t length = prototype.length();
  const std::size_t decimated_len =
      (length + static_cast<std::size_t>(factor) - 1) /
      static_cast<std::size_t>(factor);
  std::vector<double> table(
      static_cast<std::size_t>(n) * static_cast<std::size_t>(branch_len), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < branch_len; ++m) {
      const std::size_t slot = static_cast<std::size_t>(i) +
                               static_cast<std::size_t>(m) *
                                   static_cast<std::size_t>(n);
      if (slot >= decimated_len) continue;
      const std::size_t src = slot * static_cast<std::size_t>(factor);
      table[static_cast<std::size_t>(i) *
                static_cast<std::size_t>(branch_len) +
            static_cast<std::size_t>(m)] = prototype.coeffs[src];
    }
  }
  return table;
}

}  // namespace

Channelizer::Channelizer(PolyphaseBank bank, CdmConfig config)
    : bank_(std::move(bank)), config_(config) {
  config_.validate(bank_.prototype);
  slot_tables_.reserve(static_cast<std::size_t>(config_.max_factor));
  for (int f = 1; f <= config_.max_factor; ++f) {
    slot_tables_.push_back(
        slot_table(bank_.prototype, bank_.num_subbands, bank_.branch_len, f));
  }
  history_.assign(static_cast<std::size_t>(bank_.num_subbands) *
                      static_cast<std::size_t>(bank_.branch_len),
                  {0.0, 0.0});
}

void Channelizer::set_decimation(int factor) {
  CdmConfig candidate = config_;
  candidate.factor = factor;
  candidate.validate(bank_.prototype);  // throws; state untouched on failure
  config_ = candidate;
}

void Channelizer::reset() {
  std::fill(history_.begin(), history_.end(), std::complex<double>{0.0, 0.0});
  head_ = 0;
  sample_index_ = 0;
}

SubbandFrame Channelizer::process(std::complex<double> x) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
    std::ostringstream os;
    os << "non-finite input sample at index " << sample_index_;
    raise(ErrorCode::input, os.str());
  }

  const std::size_t size = history_.size();
  head_ = (head_ + size - 1) % size;  // history_[head_ + d] is x[n-d]
  history_[head_] = x;

  const int n = bank_.num_subbands;
  const int p = bank_.branch_len;
  const auto& table = slot_tables_[static_cast<std::size_t>(config_.factor - 1)];

  std::vector<std::complex<double>> branch_out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::complex<double> acc{0.0, 0.0};
    for (int m = 0; m < p; ++m) {
      const double c = table[static_cast<std::size_t>(i) *
                                 static_cast<std::size_t>(p) +
                             static_cast<std::size_t>(m)];
      if (c == 0.0) continue;
      const std::size_t d = static_cast<std::size_t>(i) +
                            static_cast<std::size_t>(m) *
                                static_cast<std::size_t>(n);
      acc += c * history_[(head_ + d) % size];
    }
    branch_out[static_cast<std::size_t>(i)] = acc;
  }

  SubbandFrame frame;
  frame.sample_index = sample_index_++;
  frame.outputs.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
      acc += bank_.twiddle(k, i) * branch_out[static_cast<std::size_t>(i)];
    }
    frame.outputs[static_cast<std::size_t>(k)] = acc;
  }
  return frame;
}

std::vector<SubbandFrame> Channelizer::process_block(
    std::span<const std::complex<double>> samples) {
  std::vector<SubbandFrame> frames;
  frames.reserve(samples.size());
  for (const auto& x : samples) frames.push_back(process(x));
  return frames;
}

std::vector<std::complex<double>> reference_subband(
    std::span<const std::complex<double>> x, std::span<const double> coeffs,
    int subband, int num_subbands) {
  std::vector<std::complex<double>> modulated(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi *
                         static_cast<double>(subband) *
                         static_cast<double>(i % static_cast<std::size_t>(
                                                     num_subbands)) /
                         static_cast<double>(num_subbands);
    modulated[i] = coeffs[i] * std::complex<double>(std::cos(angle),
                                                    std::sin(angle));
  }
  std::vector<std::complex<double>> y(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    std::complex<double> acc{0.0, 0.0};
    const std::size_t top = std::min(modulated.size() - 1, n);
    for (std::size_t i = 0; i <= top; ++i) {
      acc += modulated[i] * x[n - i];
    }
    y[n] = acc;
  }
  return y;
}

FrequencyResponse subband_response(const PrototypeFilter& prototype,
                                   int num_subbands, int subband, int factor,
                                   int num_points) {
  if (subband < 0 || subband >= num_subbands) {
    std::ostringstream os;
    os << "subband " << subband << " outside [0, " << num_subbands << ")";
    raise(ErrorCode::invalid, os.str());
  }
  const auto decimated = decimate_coefficients(prototype, factor);
  std::vector<std::complex<double>> modulated(decimated.coeffs.size());
  for (std::size_t i = 0; i < modulated.size(); ++i) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(subband) *
        static_cast<double>(i % static_cast<std::size_t>(num_subbands)) /
        static_cast<double>(num_subbands);
    modulated[i] = decimated.coeffs[i] *
                   std::complex<double>(std::cos(angle), std::sin(angle));
  }
  const bool mirrored = 2 * subband > num_subbands;
  return frequency_response(modulated, num_points, mirrored);
}

SubbandMeasurement measure_subband(const PrototypeFilter& prototype,
                                   int num_subbands, int subband, int factor,
                                   int num_points, double level_db) {
  if (subband < 0 || subband >= num_subbands) {
    std::ostringstream os;
    os << "subband " << subband << " outside [0, " << num_subbands << ")";
    raise(ErrorCode::invalid, os.str());
  }
  if (num_points < 3) {
    raise(ErrorCode::invalid, "subband measurement needs at least 3 points");
  }
  if (!(level_db < 0.0)) {
    raise(ErrorCode::invalid, "edge level must be negative dB");
  }

  const auto decimated = decimate_coefficients(prototype, factor);
  const double center_nominal =
      2.0 * static_cast<double>(subband) / static_cast<double>(num_subbands);

  // Magnitude on the window [center-1, center+1) of the frequency circle.
  const std::size_t points = static_cast<std::size_t>(num_points);
  std::vector<double> mag_db(points);
  std::vector<double> offset(points);
  const double step = 2.0 / static_cast<double>(num_points - 1);
  for (std::size_t p = 0; p < points; ++p) {
    const double u = -1.0 + static_cast<double>(p) * step;
    offset[p] = u;
    const double omega = std::numbers::pi * (center_nominal + u);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < decimated.coeffs.size(); ++i) {
      // Modulation by k on the decimated index, then evaluation.
      const double mod = 2.0 * std::numbers::pi *
                         static_cast<double>(subband) *
                         static_cast<double>(i % static_cast<std::size_t>(
                                                     num_subbands)) /
                         static_cast<double>(num_subbands);
      const double phase = mod - omega * static_cast<double>(i);
      acc += decimated.coeffs[i] *
             std::complex<double>(std::cos(phase), std::sin(phase));
    }
    const double mag = std::abs(acc);
    mag_db[p] = mag > 0.0 ? 20.0 * std::log10(mag)
                          : FrequencyResponse::kMagnitudeFloorDb;
  }

  const auto peak_it = std::max_element(mag_db.begin(), mag_db.end());
  const std::size_t peak = static_cast<std::size_t>(peak_it - mag_db.begin());
  const double threshold = *peak_it + level_db;

  auto interpolate = [&](std::size_t above, std::size_t below) {
    const double m0 = mag_db[above];
    const double m1 = mag_db[below];
    if (m1 == m0) return offset[below];
    const double t = (threshold - m0) / (m1 - m0);
    return offset[above] + t * (offset[below] - offset[above]);
  };

  double u_high = 1.0;
  double u_low = -1.0;
  bool found_high = false;
  bool found_low = false;
  for (std::size_t i = peak + 1; i < points; ++i) {
    if (mag_db[i] < threshold) {
      u_high = interpolate(i - 1, i);
      found_high = true;
      break;
    }
  }
  for (std::size_t i = peak; i-- > 0;) {
    if (mag_db[i] < threshold) {
      u_low = interpolate(i + 1, i);
      found_low = true;
      break;
    }
  }
  if (!found_low || !found_high) {
    raise(ErrorCode::not_found,
          "subband response never falls to the requested level");
  }

  SubbandMeasurement m;
  m.width = u_high - u_low;
  m.peak_db = *peak_it;
  double circle = center_nominal + 0.5 * (u_low + u_high);
  circle = std::fmod(circle, 2.0);
  if (circle < 0.0) circle += 2.0;
  m.center = circle <= 1.0 ? circle : 2.0 - circle;
  return m;
}

double measure_center_frequency(const PolyphaseBank& bank, int subband,
                                int factor, int num_points) {
  return measure_subband(bank.prototype, bank.num_subbands, subband, factor,
                         num_points)
      .center;
}

double subband_width(const PrototypeFilter& prototype, int num_subbands,
                     int subband, int factor, int num_points,
                     double level_db) {
  return measure_subband(prototype, num_subbands, subband, factor, num_points,
                         level_db)
      .width;
}

}  // namespace rdftfb
