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

#include "rdftfb/delay_model.hpp"
#include "rdftfb/dfg.hpp"

namespace rdftfb {

enum class PipelineScope {
  full,         ///< cut anywhere
  filter_only,  ///< cut only inside the filter section
};

struct RetimingResult {
  DataflowGraph graph;
  int latency = 0;          ///< uniform added latency D, all outputs
  int registers_added = 0;  ///< pipeline plus alignment registers
};

/// Inserts pipeline registers so every register-to-register combinational
/// path fits the stage budget, walking the graph in topological order and
/// cutting in front of any node that would overflow the accumulating
/// stage delay. Each node is assigned a lag (pipeline registers crossed
/// on every path from the inputs); edges between different lags receive
/// the difference, which pads reconvergent and parallel paths so the
/// operation order -- and therefore the arithmetic, bit for bit -- is
/// unchanged. All outputs are padded to one uniform latency D.
///
/// filter_only scope restricts cuts to filter-section nodes, leaving the
/// modulator combinational paths as they are (their stages may then
/// exceed the budget).
///
/// Requires a feed-forward graph and a budget no smaller than the largest
/// single-node delay present; throws Error(budget) otherwise.
RetimingResult insert_pipeline_registers(const DataflowGraph& graph,
                                         const DelayModel& model,
                                         double stage_budget,
                                         PipelineScope scope = PipelineScope::full);

}  // namespace rdftfb
