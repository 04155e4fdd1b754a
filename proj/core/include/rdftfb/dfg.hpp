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

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace rdftfb {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

enum class NodeKind : std::uint8_t {
  input,       ///< stimulus source (or constant ground when not designated)
  output,      ///< observation point, 1 data input
  const_mult,  ///< multiply by a build-time constant, 1 data input
  adder,       ///< 2-input add
  mux,         ///< 2-input select, routed by a named select line
  reg,         ///< clocked register, 1 data input
};

const char* node_kind_name(NodeKind kind) noexcept;
int node_input_count(NodeKind kind) noexcept;

/// Which part of the architecture a node belongs to. Drives resource
/// partitioning (coefficient multipliers vs. modulation rotators) and
/// section-scoped pipelining.
enum class Section : std::uint8_t {
  io,         ///< inputs, outputs, alignment registers
  filter,     ///< polyphase coefficient datapath
  modulator,  ///< modulation rotators and combine chains
};

const char* section_name(Section section) noexcept;

/// Mux routing: the hi input (port 1) is taken while the named select
/// line carries `match`, otherwise the lo input (port 0) passes through.
/// Cascading one mux per candidate realizes multi-way selection from
/// 2-input nodes.
struct SelectRef {
  std::string line;
  int match = 0;
};

struct DfgNode {
  NodeId id = kNoNode;
  NodeKind kind = NodeKind::input;
  std::complex<double> coeff{0.0, 0.0};  ///< const_mult only
  SelectRef sel;                         ///< mux only
  std::string group;  ///< mux bundle sharing one control (empty = own group)
  Section section = Section::io;
  std::string label;  ///< stable diagnostic name
};

/// Register-level netlist. Node ids are dense indices into `nodes`.
/// Edges are stored as per-node producer ports. Graphs are immutable once
/// built; analyses are pure and may run concurrently on shared instances.
struct DataflowGraph {
  struct SelectLine {
    std::string name;
    int min = 0;
    int max = 0;
    int def = 0;
  };

  std::vector<DfgNode> nodes;
  /// producers_[id][port]; unused ports hold kNoNode.
  std::vector<std::array<NodeId, 2>> producers;
  std::vector<NodeId> stimulus_inputs;  ///< inputs fed by the sample stream
  std::vector<NodeId> outputs;
  std::vector<SelectLine> selects;

  // Generation parameters (0 when hand-built or unknown).
  int num_subbands = 0;
  int max_factor = 0;
  int prototype_length = 0;

  std::size_t size() const { return nodes.size(); }

  NodeId add_node(NodeKind kind, Section section, std::string label = {});
  void connect(NodeId producer, NodeId consumer, int port);

  const SelectLine* find_select(const std::string& name) const;

  /// Structural checks: port arity per kind, every non-output node has a
  /// consumer, outputs reachable from the stimulus inputs, and the
  /// register-free subgraph is acyclic. Throws Error(graph), naming a
  /// combinational cycle when one exists.
  void validate() const;

  /// Topological order of the register-free (combinational) subgraph;
  /// register and input nodes appear first as sources.
  std::vector<NodeId> combinational_order() const;

  /// Topological order of the full graph including registers. Throws
  /// Error(graph) if the full graph has a cycle (feedback structure).
  std::vector<NodeId> full_order() const;
};

}  // namespace rdftfb
