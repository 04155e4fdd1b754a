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

#include "rdftfb/dfg.hpp"

namespace rdftfb {

/// Node tallies plus the architecture-level partitions the comparisons
/// care about: coefficient multipliers (symmetry-shared products, the
/// "half the filter length" count) versus modulation rotators, and mux
/// bundles that share one select control versus raw 2-input mux nodes.
struct ResourceReport {
  int multipliers = 0;              ///< all const_mult nodes
  int coefficient_multipliers = 0;  ///< filter-section const_mult
  int rotation_multipliers = 0;     ///< modulator-section const_mult
  int adders = 0;
  int muxes = 0;             ///< raw 2-input mux nodes
  int mux_select_groups = 0; ///< bundles sharing one control (2 per branch)
  int registers = 0;
  int inputs = 0;
  int outputs = 0;

  /// Reconfiguration adder overhead versus the fixed bank, evaluated from
  /// the graph's prototype length and factor ceiling (ceiling reading).
  long long extra_adders_vs_dftfb = 0;
};

ResourceReport count_resources(const DataflowGraph& graph);

/// Adders the reconfigurable bank needs on top of the fixed-coefficient
/// bank: one full combine chain per supported factor,
///   sum_{i=1..max_factor} (ceil(length/i) - 1).
/// The ceiling reading matches the retained-coefficient group sizes; the
/// floor variant is reported alongside since the rounding is a modeling
/// choice.
long long extra_adders(int length, int max_factor);
long long extra_adders_floor(int length, int max_factor);

}  // namespace rdftfb
