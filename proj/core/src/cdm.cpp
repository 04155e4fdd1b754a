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
#include "rdftfb/cdm.hpp"

#include <cmath>
#include <sstream>

#include "rdftfb/errors.hpp"

namespace rdftfb {

void CdmConfig::validate(const PrototypeFilter& prototype) const {
  if (max_factor < 1) {
    raise(ErrorCode::invalid, "max decimation factor must be at least 1");
  }
  if (factor < 1 || factor > max_factor) {
    std::ostringstream os;
    os << "decimation factor " << factor << " outside [1, " << max_factor
       << "]";
    raise(ErrorCode::invalid, os.str());
  }
  ensure_factor_valid(prototype, factor);
}

AliasingCheck check_aliasing(double nominal_bandwidth, int factor) {
  if (!(nominal_bandwidth > 0.0) || !(nominal_bandwidth < 1.0)) {
    raise(ErrorCode::invalid,
          "prototype bandwidth must lie strictly inside (0,1)");
  }
  if (factor < 1) {
    raise(ErrorCode::invalid, "decimation factor must be at least 1");
  }
  AliasingCheck check;
  check.scaled_bandwidth = static_cast<double>(factor) * nominal_bandwidth;
  check.margin = 1.0 - check.scaled_bandwidth;
  check.pass = check.scaled_bandwidth < 1.0;
  return check;
}

void ensure_factor_valid(const PrototypeFilter& prototype, int factor) {
  if (factor < 1) {
    raise(ErrorCode::invalid, "decimation factor must be at least 1");
  }
  if (factor == 1) return;  // identity: nothing is dropped
  if (!prototype.nominal_bandwidth.has_value()) {
    raise(ErrorCode::aliasing,
          "prototype bandwidth is unknown; cannot certify the aliasing bound");
  }
  const auto check = check_aliasing(*prototype.nominal_bandwidth, factor);
  if (!check.pass) {
    std::ostringstream os;
    os << "decimation by " << factor << " aliases: scaled bandwidth "
       << check.scaled_bandwidth << " reaches Nyquist (bound M*f_o < 1)";
    raise(ErrorCode::aliasing, os.str());
  }
}

std::vector<double> decimate_vector(std::span<const double> coeffs,
                                    int factor) {
  if (factor < 1) {
    raise(ErrorCode::invalid, "decimation factor must be at least 1");
  }
  std::vector<double> out;
  out.reserve((coeffs.size() + static_cast<std::size_t>(factor) - 1) /
              static_cast<std::size_t>(factor));
  for (std::size_t i = 0; i < coeffs.size();
       i += static_cast<std::size_t>(factor)) {
    out.push_back(coeffs[i]);
  }
  return out;
}

DecimatedFilter decimate_coefficients(const PrototypeFilter& prototype,
                                      int factor) {
  prototype.validate();
  ensure_factor_valid(prototype, factor);
  DecimatedFilter result;
  result.coeffs = decimate_vector(prototype.coeffs, factor);
  result.source_length = prototype.length();
  result.factor = factor;
  return result;
}

FrequencyResponse decimated_response(const PrototypeFilter& prototype,
                                     int factor, int num_points) {
  const auto decimated = decimate_coefficients(prototype, factor);
  return frequency_response(decimated.coeffs, num_points);
}

}  // namespace rdftfb
