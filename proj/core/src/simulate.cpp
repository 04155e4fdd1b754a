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
#include "rdftfb/simulate.hpp"

#include <algorithm>
#include <sstream>

#include "rdftfb/errors.hpp"

namespace rdftfb {

namespace {

int select_value(const DataflowGraph& g, const std::string& line,
                 const std::map<std::string, int>& provided) {
  const auto* decl = g.find_select(line);
  if (decl == nullptr) {
    raise(ErrorCode::select, "unknown select line '" + line + "'");
  }
  const auto it = provided.find(line);
  const int value = it != provided.end() ? it->second : decl->def;
  if (value < decl->min || value > decl->max) {
    std::ostringstream os;
    os << "select '" << line << "' value " << value << " outside ["
       << decl->min << ", " << decl->max << "]";
    raise(ErrorCode::select, os.str());
  }
  return value;
}

}  // namespace

SimulationResult simulate(const DataflowGraph& graph,
                          std::span<const std::complex<double>> stimulus,
                          const std::map<std::string, int>& selects,
                          int cycles) {
  graph.validate();
  if (cycles < 0) raise(ErrorCode::invalid, "cycle count must be >= 0");
  for (const auto& [name, value] : selects) {
    (void)value;
    if (graph.find_select(name) == nullptr) {
      raise(ErrorCode::select, "unknown select line '" + name + "'");
    }
  }

  const std::size_t n = graph.size();

  // Resolve mux routing once: select lines are quasi-static.
  std::vector<char> take_hi(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& node = graph.nodes[v];
    if (node.kind != NodeKind::mux) continue;
    const int value = select_value(graph, node.sel.line, selects);
    take_hi[v] = value == node.sel.match ? 1 : 0;
  }

  const auto order = graph.combinational_order();

  std::vector<std::complex<double>> value(n, {0.0, 0.0});
  std::vector<std::complex<double>> reg_state(n, {0.0, 0.0});
  std::vector<NodeId> registers;
  for (std::size_t v = 0; v < n; ++v) {
    if (graph.nodes[v].kind == NodeKind::reg) {
      registers.push_back(static_cast<NodeId>(v));
    }
  }

  SimulationResult result;
  result.outputs.assign(graph.outputs.size(), {});
  for (auto& row : result.outputs) {
    row.reserve(static_cast<std::size_t>(cycles));
  }

  const NodeId stim_node =
      graph.stimulus_inputs.empty() ? kNoNode : graph.stimulus_inputs.front();

  std::vector<NodeId> inputs;
  for (std::size_t v = 0; v < n; ++v) {
    if (graph.nodes[v].kind == NodeKind::input) {
      inputs.push_back(static_cast<NodeId>(v));
    }
  }

  for (int cycle = 0; cycle < cycles; ++cycle) {
    // Sources settle first: stimulus, grounds, register outputs.
    for (NodeId v : inputs) {
      value[static_cast<std::size_t>(v)] =
          (v == stim_node && static_cast<std::size_t>(cycle) < stimulus.size())
              ? stimulus[static_cast<std::size_t>(cycle)]
              : std::complex<double>{0.0, 0.0};
    }
    for (NodeId r : registers) {
      value[static_cast<std::size_t>(r)] = reg_state[static_cast<std::size_t>(r)];
    }
    for (NodeId v : order) {
      const auto& node = graph.nodes[static_cast<std::size_t>(v)];
      const auto in = [&](int p) {
        return value[static_cast<std::size_t>(
            graph.producers[static_cast<std::size_t>(v)]
                           [static_cast<std::size_t>(p)])];
      };
      switch (node.kind) {
        case NodeKind::input:
        case NodeKind::reg:
          break;  // preloaded above
        case NodeKind::const_mult:
          value[static_cast<std::size_t>(v)] = node.coeff * in(0);
          break;
        case NodeKind::adder:
          value[static_cast<std::size_t>(v)] = in(0) + in(1);
          break;
        case NodeKind::mux:
          value[static_cast<std::size_t>(v)] =
              take_hi[static_cast<std::size_t>(v)] ? in(1) : in(0);
          break;
        case NodeKind::output:
          value[static_cast<std::size_t>(v)] = in(0);
          break;
      }
    }
    for (std::size_t k = 0; k < graph.outputs.size(); ++k) {
      result.outputs[k].push_back(
          value[static_cast<std::size_t>(graph.outputs[k])]);
    }
    // Clock edge: every register captures its D input simultaneously.
    for (NodeId r : registers) {
      reg_state[static_cast<std::size_t>(r)] =
          value[static_cast<std::size_t>(
              graph.producers[static_cast<std::size_t>(r)][0])];
    }
  }
  return result;
}

SimulationResult simulate(const DataflowGraph& graph,
                          std::span<const std::complex<double>> stimulus,
                          int factor, int cycles) {
  if (graph.selects.empty() && factor != 1) {
    raise(ErrorCode::select,
          "graph has no select lines; only factor 1 is available");
  }
  std::map<std::string, int> selects;
  for (const auto& line : graph.selects) {
    selects[line.name] = factor;
  }
  return simulate(graph, stimulus, selects, cycles);
}

}  // namespace rdftfb
