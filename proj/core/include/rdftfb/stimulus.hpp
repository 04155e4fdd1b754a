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
#include <vector>

namespace rdftfb {

/// splitmix64: tiny, well-mixed, and identical on every platform, so
/// seeded stimuli (and everything derived from them) reproduce exactly.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1), 53 mantissa bits.
  double unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [-1,1).
  double symmetric() { return 2.0 * unit() - 1.0; }

 private:
  std::uint64_t state_;
};

/// Complex stream with independent uniform [-1,1) components.
std::vector<std::complex<double>> random_stream(std::uint64_t seed,
                                                std::size_t length);

/// Unit impulse at sample 0.
std::vector<std::complex<double>> impulse_stream(std::size_t length);

/// Complex exponential exp(j*pi*freq*n), freq normalized to Nyquist = 1.
std::vector<std::complex<double>> tone_stream(double freq, std::size_t length);

}  // namespace rdftfb
