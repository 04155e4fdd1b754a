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
#include "rdftfb/resources.hpp"

#include <set>
#include <string>

#include "rdftfb/errors.hpp"

namespace rdftfb {

ResourceReport count_resources(const DataflowGraph& graph) {
  ResourceReport report;
  std::set<std::string> groups;
  int anonymous_muxes = 0;
  for (const auto& node : graph.nodes) {
    switch (node.kind) {
      case NodeKind::const_mult:
        ++report.multipliers;
        if (node.section == Section::modulator) {
          ++report.rotation_multipliers;
        } else {
          ++report.coefficient_multipliers;
        }
        break;
      case NodeKind::adder:
        ++report.adders;
        break;
      case NodeKind::mux:
        ++report.muxes;
        if (node.group.empty()) {
          ++anonymous_muxes;  // ungrouped muxes count individually
        } else {
          groups.insert(node.group);
        }
        break;
      case NodeKind::reg:
        ++report.registers;
        break;
      case NodeKind::input:
        ++report.inputs;
        break;
      case NodeKind::output:
        ++report.outputs;
        break;
    }
  }
  report.mux_select_groups = static_cast<int>(groups.size()) + anonymous_muxes;
  if (graph.prototype_length > 0 && graph.max_factor > 0) {
    report.extra_adders_vs_dftfb =
        extra_adders(graph.prototype_length, graph.max_factor);
  }
  return report;
}

long long extra_adders(int length, int max_factor) {
  if (length < 1 || max_factor < 1) {
    raise(ErrorCode::invalid, "extra-adder formula needs length, factor >= 1");
  }
  long long total = 0;
  for (int i = 1; i <= max_factor; ++i) {
    total += (static_cast<long long>(length) + i - 1) / i - 1;
  }
  return total;
}

long long extra_adders_floor(int length, int max_factor) {
  if (length < 1 || max_factor < 1) {
    raise(ErrorCode::invalid, "extra-adder formula needs length, factor >= 1");
  }
  long long total = 0;
  for (int i = 1; i <= max_factor; ++i) {
    total += static_cast<long long>(length) / i - 1;
  }
  return total;
}

}  // namespace rdftfb
