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

#include <iosfwd>
#include <string>
#include <vector>

#include "rdftfb/delay_model.hpp"
#include "rdftfb/dfg.hpp"

namespace rdftfb {

/// Longest register-to-register (or input/output bounded) combinational
/// path. The node list includes the bounding endpoints; tau_cpd is the
/// sum of combinational kind-delays along it (endpoints contribute 0),
/// plus the per-edge routing constant when configured.
struct TimingReport {
  double tau_cpd = 0.0;
  std::vector<NodeId> critical_path;

  double f_clk_max = 0.0;  ///< 1 / tau_cpd, the pure logic-delay bound

  /// Practical clock-period bound: tau_cpd + t_setup + clock-to-out.
  double t_clk_min = 0.0;
  double f_clk_max_registered = 0.0;  ///< 1 / t_clk_min

  /// Literal-period reading that charges hold time to the period as well:
  /// tau_cpd + t_setup + t_hold. Reported alongside, selectable in the
  /// CLI via --strict-period.
  double t_clk_min_strict = 0.0;

  /// Min-delay (hold) analysis: shortest combinational segment and
  /// whether it covers t_hold - clock-to-out.
  double min_comb_delay = 0.0;
  bool hold_ok = true;

  /// Combinational core of the path (endpoints stripped).
  std::vector<NodeId> combinational_core(const DataflowGraph& g) const;
};

/// Computes the critical path. Ties are broken by the lexicographically
/// smallest node-id sequence, so reports are deterministic. Throws
/// Error(graph) when the register-free subgraph has a cycle.
TimingReport critical_path(const DataflowGraph& graph, const DelayModel& model);

/// Machine-readable path listing: `path_rank,node_id,kind,delay,cum_delay`.
void write_timing_csv(const DataflowGraph& graph, const DelayModel& model,
                      const TimingReport& report, std::ostream& out);

/// Human-readable summary table.
std::string format_timing_report(const DataflowGraph& graph,
                                 const DelayModel& model,
                                 const TimingReport& report,
                                 bool strict_period = false);

}  // namespace rdftfb
