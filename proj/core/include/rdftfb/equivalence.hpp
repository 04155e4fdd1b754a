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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdftfb/dfg.hpp"

namespace rdftfb {

struct Mismatch {
  int stimulus = 0;
  int output = 0;
  int cycle = 0;
  std::complex<double> expected{0.0, 0.0};
  std::complex<double> actual{0.0, 0.0};
};

/// Outcome of a bit-exact latency-alignment check. Not an exception: a
/// counterexample is an ordinary result.
struct EquivalenceResult {
  bool equivalent = false;
  int latency = 0;  ///< uniform shift D with g2 lagging g1
  std::optional<Mismatch> counterexample;
};

/// Searches for the unique shift D (0 <= D <= register count of g2) such
/// that g2's outputs equal g1's delayed by D, bit for bit, on every
/// stimulus. Streams are zero-extended so the trailing D cycles are
/// observable. Requires matching input/output arity.
EquivalenceResult check_equivalence(
    const DataflowGraph& g1, const DataflowGraph& g2,
    const std::vector<std::vector<std::complex<double>>>& stimuli,
    const std::map<std::string, int>& selects);

}  // namespace rdftfb
