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
#include "rdftfb/stimulus.hpp"

#include <cmath>
#include <numbers>

namespace rdftfb {

std::vector<std::complex<double>> random_stream(std::uint64_t seed,
                                                std::size_t length) {
  SplitMix64 rng(seed);
  std::vector<std::complex<double>> stream(length);
  for (auto& s : stream) {
    const double re = rng.symmetric();
    const double im = rng.symmetric();
    s = {re, im};
  }
  return stream;
}

std::vector<std::complex<double>> impulse_stream(std::size_t length) {
  std::vector<std::complex<double>> stream(length, {0.0, 0.0});
  if (!stream.empty()) stream[0] = {1.0, 0.0};
  return stream;
}

std::vector<std::complex<double>> tone_stream(double freq,
                                              std::size_t length) {
  std::vector<std::complex<double>> stream(length);
  for (std::size_t n = 0; n < length; ++n) {
    const double phase =
        std::numbers::pi * freq * static_cast<double>(n);
    stream[n] = {std::cos(phase), std::sin(phase)};
  }
  return stream;
}

}  // namespace rdftfb
