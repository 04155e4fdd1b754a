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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rdftfb {

/// Fixed lowpass prototype of the bank. Values are immutable once built;
/// instances are safe to share between threads.
struct PrototypeFilter {
  std::vector<double> coeffs;

  /// Measured -6 dB edge, when the response crosses that level.
  /// Lowpass prototypes always have one; arbitrary imported coefficient
  /// sets may not.
  std::optional<double> nominal_bandwidth;

  /// True when coeffs[i] == coeffs[L-1-i] holds exactly for all i.
  bool symmetric = false;

  std::size_t length() const { return coeffs.size(); }

  /// Exact (bitwise) mirror-image check.
  static bool is_symmetric(std::span<const double> coeffs);

  /// Validates length >= 1 and that every coefficient is finite.
  void validate() const;
};

}  // namespace rdftfb
