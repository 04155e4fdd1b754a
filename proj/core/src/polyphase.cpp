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
#include "rdftfb/polyphase.hpp"

#include <cmath>
#include <numbers>

#include "rdftfb/errors.hpp"

namespace rdftfb {

PolyphaseBank polyphase_decompose(const PrototypeFilter& prototype,
                                  int num_subbands) {
  prototype.validate();
  if (num_subbands < 2) {
    raise(ErrorCode::invalid, "subband count must be at least 2");
  }

  PolyphaseBank bank;
  bank.num_subbands = num_subbands;
  const std::size_t n = static_cast<std::size_t>(num_subbands);
  const std::size_t length = prototype.length();
  bank.branch_len = static_cast<int>((length + n - 1) / n);
  bank.branches.assign(n, std::vector<double>(
                              static_cast<std::size_t>(bank.branch_len), 0.0));
  for (std::size_t j = 0; j < length; ++j) {
    bank.branches[j % n][j / n] = prototype.coeffs[j];
  }

  bank.twiddles.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      // Reduce the angle index modulo N so conjugate-symmetric entries
      // are bitwise identical.
      const std::size_t t = (k * i) % n;
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
      bank.twiddles[k * n + i] = {std::cos(angle), std::sin(angle)};
    }
  }

  bank.prototype = prototype;
  return bank;
}

}  // namespace rdftfb
