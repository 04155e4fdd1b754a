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
#include <vector>

#include "rdftfb/prototype_filter.hpp"

namespace rdftfb {

/// Polyphase split of the prototype plus the modulation kernel.
///
/// Branch i holds every N-th coefficient starting at offset i, tail
/// zero-padded to the common branch length. The twiddle matrix entry
/// (k,i) is exp(+j*2*pi*k*i/N); that sign convention is used everywhere.
/// Immutable after construction and safe to share between threads.
struct PolyphaseBank {
  int num_subbands = 0;  ///< N
  int branch_len = 0;    ///< ceil(L/N)
  std::vector<std::vector<double>> branches;   ///< N rows, branch_len each
  std::vector<std::complex<double>> twiddles;  ///< N*N row-major
  PrototypeFilter prototype;                   ///< source coefficients

  std::complex<double> twiddle(int k, int i) const {
    return twiddles[static_cast<std::size_t>(k) *
                        static_cast<std::size_t>(num_subbands) +
                    static_cast<std::size_t>(i)];
  }
};

/// Splits the prototype into num_subbands branches (num_subbands >= 2).
PolyphaseBank polyphase_decompose(const PrototypeFilter& prototype,
                                  int num_subbands);

}  // namespace rdftfb
