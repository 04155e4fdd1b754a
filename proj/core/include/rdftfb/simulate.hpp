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
#include <span>
#include <string>
#include <vector>

#include "rdftfb/dfg.hpp"

namespace rdftfb {

/// Cycle-accurate synchronous semantics: all registers update together at
/// the cycle boundary; combinational nodes evaluate in topological order.
/// Registers reset to zero. The stream drives the first designated input,
/// zero-extended past its length; input nodes outside the stimulus set
/// read constant zero (grounds). Select lines hold the given (or default)
/// value for the whole run.
struct SimulationResult {
  /// outputs[k][cycle], one row per designated output.
  std::vector<std::vector<std::complex<double>>> outputs;
};

SimulationResult simulate(const DataflowGraph& graph,
                          std::span<const std::complex<double>> stimulus,
                          const std::map<std::string, int>& selects,
                          int cycles);

/// Convenience: every select line is driven with `factor` (the generated
/// architecture routes the decimation setting to both coefficient-select
/// lines).
SimulationResult simulate(const DataflowGraph& graph,
                          std::span<const std::complex<double>> stimulus,
                          int factor, int cycles);

}  // namespace rdftfb
