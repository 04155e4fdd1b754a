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
#include "rdftfb/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "rdftfb/errors.hpp"

namespace rdftfb {

namespace {

bool is_combinational(NodeKind kind) {
  return kind == NodeKind::const_mult || kind == NodeKind::adder ||
         kind == NodeKind::mux;
}

double max_node_delay_present(const DataflowGraph& g, const DelayModel& m) {
  double worst = 0.0;
  for (const auto& node : g.nodes) {
    if (is_combinational(node.kind)) {
      worst = std::max(worst, m.node_delay(node.kind));
    }
  }
  return worst;
}

}  // namespace

RetimingResult insert_pipeline_registers(const DataflowGraph& graph,
                                         const DelayModel& model,
                                         double stage_budget,
                                         PipelineScope scope) {
  model.validate();
  graph.validate();
  const double worst = max_node_delay_present(graph, model);
  if (stage_budget < worst) {
    std::ostringstream os;
    os << "stage budget " << stage_budget
       << " is below the largest single-node delay " << worst;
    raise(ErrorCode::budget, os.str());
  }

  const auto order = graph.full_order();  // requires feed-forward structure
  const std::size_t n = graph.size();

  // lag(v): pipeline registers inserted on every input-to-v path.
  // arr(v): combinational delay accumulated since the last register
  // (original or inserted) on the worst path into v.
  std::vector<int> lag(n, 0);
  std::vector<double> arr(n, 0.0);
  constexpr double kEps = 1e-12;

  for (NodeId v : order) {
    const auto& node = graph.nodes[static_cast<std::size_t>(v)];
    const int ports = node_input_count(node.kind);
    if (ports == 0) continue;  // inputs: lag 0, arr 0

    int max_lag = 0;
    for (int p = 0; p < ports; ++p) {
      const NodeId u = graph.producers[static_cast<std::size_t>(v)]
                                      [static_cast<std::size_t>(p)];
      max_lag = std::max(max_lag, lag[static_cast<std::size_t>(u)]);
    }
    lag[static_cast<std::size_t>(v)] = max_lag;

    if (node.kind == NodeKind::reg) {
      arr[static_cast<std::size_t>(v)] = 0.0;
      continue;
    }

    double arr_in = 0.0;
    for (int p = 0; p < ports; ++p) {
      const NodeId u = graph.producers[static_cast<std::size_t>(v)]
                                      [static_cast<std::size_t>(p)];
      const auto& pu = graph.nodes[static_cast<std::size_t>(u)];
      // Edges arriving from a lower lag get inserted registers, so they
      // start a fresh stage; register and input producers do too.
      if (lag[static_cast<std::size_t>(u)] < max_lag) continue;
      if (pu.kind == NodeKind::reg || pu.kind == NodeKind::input) continue;
      arr_in = std::max(arr_in, arr[static_cast<std::size_t>(u)]);
    }

    if (node.kind == NodeKind::output) {
      arr[static_cast<std::size_t>(v)] = arr_in;
      continue;
    }

    const double through = arr_in + model.node_delay(node.kind);
    const bool may_cut =
        scope == PipelineScope::full || node.section == Section::filter;
    if (through > stage_budget + kEps && may_cut) {
      lag[static_cast<std::size_t>(v)] = max_lag + 1;
      arr[static_cast<std::size_t>(v)] = model.node_delay(node.kind);
    } else {
      arr[static_cast<std::size_t>(v)] = through;
    }
  }

  int latency = 0;
  for (NodeId out : graph.outputs) {
    latency = std::max(latency, lag[static_cast<std::size_t>(out)]);
  }
  for (NodeId out : graph.outputs) {
    lag[static_cast<std::size_t>(out)] = latency;  // uniform output latency
  }

  // Rebuild with the same ids, appending inserted registers at the end.
  RetimingResult result;
  DataflowGraph& out = result.graph;
  out.nodes = graph.nodes;
  out.producers.assign(n, {kNoNode, kNoNode});
  out.stimulus_inputs = graph.stimulus_inputs;
  out.outputs = graph.outputs;
  out.selects = graph.selects;
  out.num_subbands = graph.num_subbands;
  out.max_factor = graph.max_factor;
  out.prototype_length = graph.prototype_length;

  for (std::size_t v = 0; v < n; ++v) {
    const int ports = node_input_count(graph.nodes[v].kind);
    for (int p = 0; p < ports; ++p) {
      const NodeId u = graph.producers[v][static_cast<std::size_t>(p)];
      const int inserted = lag[v] - lag[static_cast<std::size_t>(u)];
      NodeId tail = u;
      for (int r = 0; r < inserted; ++r) {
        std::ostringstream label;
        label << "pipe." << u << "." << v << "." << p << "." << r;
        const NodeId reg = out.add_node(
            NodeKind::reg, graph.nodes[v].section, label.str());
        out.connect(tail, reg, 0);
        tail = reg;
        ++result.registers_added;
      }
      out.connect(tail, static_cast<NodeId>(v), p);
    }
  }

  result.latency = latency;
  out.validate();
  return result;
}

}  // namespace rdftfb
