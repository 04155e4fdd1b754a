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
#include "rdftfb/prototype_filter.hpp"

#include <cmath>

#include "rdftfb/errors.hpp"

namespace rdftfb {

bool PrototypeFilter::is_symmetric(std::span<const double> coeffs) {
  const std::size_t n = coeffs.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (coeffs[i] != coeffs[n - 1 - i]) return false;
  }
  return true;
}

void PrototypeFilter::validate() const {
  if (coeffs.empty()) {
    raise(ErrorCode::invalid, "prototype filter must have at least one coefficient");
  }
  for (double c : coeffs) {
    if (!std::isfinite(c)) {
      raise(ErrorCode::invalid, "prototype filter contains a non-finite coefficient");
    }
  }
}

}  // namespace rdftfb
