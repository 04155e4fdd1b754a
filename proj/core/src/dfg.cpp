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
#include "rdftfb/dfg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "rdftfb/errors.hpp"

namespace rdftfb {

const char* node_kind_name(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::input: return "input";
    case NodeKind::output: return "output";
    case NodeKind::const_mult: return "const_mult";
    case NodeKind::adder: return "adder";
    case NodeKind::mux: return "mux";
    case NodeKind::reg: return "register";
  }
  return "?";
}

int node_input_count(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::input: return 0;
    case NodeKind::output: return 1;
    case NodeKind::const_mult: return 1;
    case NodeKind::adder: return 2;
    case NodeKind::mux: return 2;
    case NodeKind::reg: return 1;
  }
  return 0;
}

const char* section_name(Section section) noexcept {
  switch (section) {
    case Section::io: return "io";
    case Section::filter: return "filter";
    case Section::modulator: return "modulator";
  }
  return "?";
}

NodeId DataflowGraph::add_node(NodeKind kind, Section section,
                               std::string label) {
  DfgNode node;
  node.id = static_cast<NodeId>(nodes.size());
  node.kind = kind;
  node.section = section;
  node.label = std::move(label);
  nodes.push_back(std::move(node));
  producers.push_back({kNoNode, kNoNode});
  return nodes.back().id;
}

void DataflowGraph::connect(NodeId producer, NodeId consumer, int port) {
  if (producer < 0 || consumer < 0 ||
      static_cast<std::size_t>(producer) >= nodes.size() ||
      static_cast<std::size_t>(consumer) >= nodes.size() || port < 0 ||
      port >= node_input_count(nodes[static_cast<std::size_t>(consumer)].kind)) {
    raise(ErrorCode::graph, "edge references an invalid node or port");
  }
  producers[static_cast<std::size_t>(consumer)][static_cast<std::size_t>(port)] =
      producer;
}

const DataflowGraph::SelectLine* DataflowGraph::find_select(
    const std::string& name) const {
  for (const auto& line : selects) {
    if (line.name == name) return &line;
  }
  return nullptr;
}

namespace {

/// Kahn topological sort. `use_edge` filters which producer->consumer
/// dependencies count. Returns an order of ALL nodes, or an empty vector
/// when the filtered graph has a cycle.
std::vector<NodeId> topo_sort(
    const DataflowGraph& g,
    const std::function<bool(NodeId producer, NodeId consumer)>& use_edge) {
  const std::size_t n = g.size();
  std::vector<int> pending(n, 0);
  std::vector<std::vector<NodeId>> consumers(n);
  for (std::size_t v = 0; v < n; ++v) {
    const int ports = node_input_count(g.nodes[v].kind);
    for (int p = 0; p < ports; ++p) {
      const NodeId u = g.producers[v][static_cast<std::size_t>(p)];
      if (u == kNoNode) continue;
      if (!use_edge(u, static_cast<NodeId>(v))) continue;
      ++pending[v];
      consumers[static_cast<std::size_t>(u)].push_back(static_cast<NodeId>(v));
    }
  }
  std::vector<NodeId> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (pending[v] == 0) ready.push_back(static_cast<NodeId>(v));
  }
  // Smallest id first keeps the order (and everything derived from it)
  // deterministic.
  std::vector<NodeId> order;
  order.reserve(n);
  std::size_t cursor = 0;
  std::sort(ready.begin(), ready.end());
  while (cursor < ready.size()) {
    const NodeId v = ready[cursor++];
    order.push_back(v);
    for (NodeId w : consumers[static_cast<std::size_t>(v)]) {
      if (--pending[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
  }
  if (order.size() != n) return {};
  return order;
}

bool combinational_edge(const DataflowGraph& g, NodeId producer,
                        NodeId consumer) {
  // A register output starts a new timing segment, so dependencies
  // through registers do not constrain combinational evaluation order.
  (void)consumer;
  return g.nodes[static_cast<std::size_t>(producer)].kind != NodeKind::reg;
}

std::string describe_cycle(const DataflowGraph& g) {
  // DFS for one combinational cycle, for the error message.
  const std::size_t n = g.size();
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<NodeId> stack;
  std::string found;
  std::function<bool(NodeId)> dfs = [&](NodeId v) {
    state[static_cast<std::size_t>(v)] = 1;
    stack.push_back(v);
    const int ports = node_input_count(g.nodes[static_cast<std::size_t>(v)].kind);
    for (int p = 0; p < ports; ++p) {
      const NodeId u = g.producers[static_cast<std::size_t>(v)][static_cast<std::size_t>(p)];
      if (u == kNoNode || g.nodes[static_cast<std::size_t>(u)].kind == NodeKind::reg) {
        continue;
      }
      if (state[static_cast<std::size_t>(u)] == 1) {
        std::ostringstream os;
        os << "combinational cycle:";
        bool in_cycle = false;
        for (NodeId w : stack) {
          if (w == u) in_cycle = true;
          if (in_cycle) os << " " << w;
        }
        os << " -> " << u;
        found = os.str();
        return true;
      }
      if (state[static_cast<std::size_t>(u)] == 0 && dfs(u)) return true;
    }
    stack.pop_back();
    state[static_cast<std::size_t>(v)] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n && found.empty(); ++v) {
    if (state[v] == 0) dfs(static_cast<NodeId>(v));
  }
  return found.empty() ? std::string("combinational cycle detected") : found;
}

}  // namespace

std::vector<NodeId> DataflowGraph::combinational_order() const {
  auto order = topo_sort(*this, [this](NodeId u, NodeId v) {
    return combinational_edge(*this, u, v);
  });
  if (order.empty() && !nodes.empty()) {
    raise(ErrorCode::graph, describe_cycle(*this));
  }
  return order;
}

std::vector<NodeId> DataflowGraph::full_order() const {
  auto order = topo_sort(*this, [](NodeId, NodeId) { return true; });
  if (order.empty() && !nodes.empty()) {
    raise(ErrorCode::graph,
          "graph contains a feedback cycle (register loop); this operation "
          "requires a feed-forward structure");
  }
  return order;
}

void DataflowGraph::validate() const {
  const std::size_t n = size();
  if (producers.size() != n) {
    raise(ErrorCode::graph, "producer table out of sync with node table");
  }
  std::vector<int> consumer_count(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& node = nodes[v];
    if (node.id != static_cast<NodeId>(v)) {
      raise(ErrorCode::graph, "node ids must be dense and in order");
    }
    const int ports = node_input_count(node.kind);
    for (int p = 0; p < 2; ++p) {
      const NodeId u = producers[v][static_cast<std::size_t>(p)];
      if (p < ports) {
        if (u == kNoNode) {
          std::ostringstream os;
          os << "node " << v << " (" << node_kind_name(node.kind)
             << ") is missing input port " << p;
          raise(ErrorCode::graph, os.str());
        }
        if (u < 0 || static_cast<std::size_t>(u) >= n) {
          raise(ErrorCode::graph, "edge from unknown node");
        }
        ++consumer_count[static_cast<std::size_t>(u)];
      } else if (u != kNoNode) {
        std::ostringstream os;
        os << "node " << v << " (" << node_kind_name(node.kind)
           << ") has an extra input on port " << p;
        raise(ErrorCode::graph, os.str());
      }
    }
    if (node.kind == NodeKind::const_mult &&
        (!std::isfinite(node.coeff.real()) ||
         !std::isfinite(node.coeff.imag()))) {
      raise(ErrorCode::graph, "const_mult coefficient must be finite");
    }
    if (node.kind == NodeKind::mux) {
      if (find_select(node.sel.line) == nullptr) {
        std::ostringstream os;
        os << "mux node " << v << " references unknown select line '"
           << node.sel.line << "'";
        raise(ErrorCode::graph, os.str());
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (nodes[v].kind != NodeKind::output && consumer_count[v] == 0) {
      std::ostringstream os;
      os << "node " << v << " (" << node_kind_name(nodes[v].kind) << ", '"
         << nodes[v].label << "') has no consumer";
      raise(ErrorCode::graph, os.str());
    }
  }
  for (NodeId out : outputs) {
    if (out < 0 || static_cast<std::size_t>(out) >= n ||
        nodes[static_cast<std::size_t>(out)].kind != NodeKind::output) {
      raise(ErrorCode::graph, "designated output is not an output node");
    }
  }
  for (NodeId in : stimulus_inputs) {
    if (in < 0 || static_cast<std::size_t>(in) >= n ||
        nodes[static_cast<std::size_t>(in)].kind != NodeKind::input) {
      raise(ErrorCode::graph, "designated input is not an input node");
    }
  }

  // Acyclicity of the register-free subgraph (throws when violated).
  (void)combinational_order();

  // Reachability: every output must see at least one stimulus input.
  if (!stimulus_inputs.empty()) {
    std::vector<char> reach(n, 0);
    for (NodeId in : stimulus_inputs) reach[static_cast<std::size_t>(in)] = 1;
    // Producer links point backwards; propagate forward by fixpoint over a
    // full-order pass when possible, falling back to iteration for cyclic
    // graphs.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (reach[v]) continue;
        const int ports = node_input_count(nodes[v].kind);
        for (int p = 0; p < ports; ++p) {
          const NodeId u = producers[v][static_cast<std::size_t>(p)];
          if (u != kNoNode && reach[static_cast<std::size_t>(u)]) {
            reach[v] = 1;
            changed = true;
            break;
          }
        }
      }
    }
    for (NodeId out : outputs) {
      if (!reach[static_cast<std::size_t>(out)]) {
        std::ostringstream os;
        os << "output node " << out << " is not reachable from the input";
        raise(ErrorCode::graph, os.str());
      }
    }
  }
}

}  // namespace rdftfb
