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
#include <span>
#include <vector>

#include "rdftfb/frequency_response.hpp"
#include "rdftfb/prototype_filter.hpp"

namespace rdftfb {

/// Runtime decimation setting plus the architectural ceiling the
/// reconfiguration hardware is provisioned for.
struct CdmConfig {
  int factor = 1;      ///< active M, 1 <= factor <= max_factor
  int max_factor = 1;  ///< M_max the select network supports

  /// Checks 1 <= factor <= max_factor and the aliasing bound against the
  /// prototype bandwidth. Throws Error(invalid) or Error(aliasing).
  void validate(const PrototypeFilter& prototype) const;
};

/// Strict aliasing bound: the stretched bandwidth M*f_o must stay below
/// Nyquist (normalized value 1).
struct AliasingCheck {
  bool pass = false;
  double margin = 0.0;            ///< 1 - M*f_o
  double scaled_bandwidth = 0.0;  ///< M*f_o
};

/// Requires 0 < bandwidth < 1 and factor >= 1.
AliasingCheck check_aliasing(double nominal_bandwidth, int factor);

/// Throws Error(invalid) for factor < 1; Error(aliasing) when the bound
/// fails or (for factor >= 2) the prototype bandwidth is unknown or
/// degenerate. factor == 1 is the identity and always allowed.
void ensure_factor_valid(const PrototypeFilter& prototype, int factor);

/// Keep every factor-th entry starting at index 0: out[i] = in[i*factor].
/// Resulting length is ceil(len/factor).
std::vector<double> decimate_vector(std::span<const double> coeffs, int factor);

/// Retained-and-grouped coefficient set for one decimation factor.
struct DecimatedFilter {
  std::vector<double> coeffs;
  std::size_t source_length = 0;
  int factor = 1;
};

DecimatedFilter decimate_coefficients(const PrototypeFilter& prototype,
                                      int factor);

/// Response of the decimated coefficient set (uniform [0,1] grid).
FrequencyResponse decimated_response(const PrototypeFilter& prototype,
                                     int factor, int num_points);

}  // namespace rdftfb
