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
#include "rdftfb/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "rdftfb/errors.hpp"

namespace rdftfb {

namespace {

using nlohmann::json;

NodeKind kind_from_string(const std::string& s) {
  if (s == "input") return NodeKind::input;
  if (s == "output") return NodeKind::output;
  if (s == "const_mult") return NodeKind::const_mult;
  if (s == "adder") return NodeKind::adder;
  if (s == "mux") return NodeKind::mux;
  if (s == "register") return NodeKind::reg;
  raise(ErrorCode::parse, "unknown node kind '" + s + "'");
}

Section section_from_string(const std::string& s) {
  if (s == "io") return Section::io;
  if (s == "filter") return Section::filter;
  if (s == "modulator") return Section::modulator;
  raise(ErrorCode::parse, "unknown section '" + s + "'");
}

}  // namespace

void save_graph(const DataflowGraph& graph, std::ostream& out) {
  json doc;
  doc["format"] = "rdftfb-graph";
  doc["version"] = 1;
  doc["num_subbands"] = graph.num_subbands;
  doc["m_max"] = graph.max_factor;
  doc["prototype_length"] = graph.prototype_length;

  json selects = json::array();
  for (const auto& line : graph.selects) {
    selects.push_back({{"name", line.name},
                       {"min", line.min},
                       {"max", line.max},
                       {"default", line.def}});
  }
  doc["selects"] = std::move(selects);
  doc["inputs"] = graph.stimulus_inputs;
  doc["outputs"] = graph.outputs;

  json nodes = json::array();
  for (const auto& node : graph.nodes) {
    json entry;
    entry["id"] = node.id;
    entry["kind"] = node_kind_name(node.kind);
    if (node.kind == NodeKind::const_mult) {
      if (node.coeff.imag() == 0.0) {
        entry["coeff"] = node.coeff.real();
      } else {
        entry["coeff"] = json::array({node.coeff.real(), node.coeff.imag()});
      }
    }
    if (node.kind == NodeKind::mux) {
      entry["sel"] = {{"line", node.sel.line}, {"match", node.sel.match}};
      if (!node.group.empty()) entry["group"] = node.group;
    }
    if (node.section != Section::io) {
      entry["section"] = section_name(node.section);
    }
    if (!node.label.empty()) entry["label"] = node.label;
    nodes.push_back(std::move(entry));
  }
  doc["nodes"] = std::move(nodes);

  json edges = json::array();
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const int ports = node_input_count(graph.nodes[v].kind);
    for (int p = 0; p < ports; ++p) {
      const NodeId u = graph.producers[v][static_cast<std::size_t>(p)];
      if (u == kNoNode) continue;
      edges.push_back(
          {{"from", u}, {"to", static_cast<NodeId>(v)}, {"port", p}});
    }
  }
  doc["edges"] = std::move(edges);

  out << doc.dump(1, '\t') << "\n";
}

void save_graph_file(const DataflowGraph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::io, "cannot write graph file: " + path);
  save_graph(graph, out);
}

DataflowGraph load_graph(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    raise(ErrorCode::parse, std::string("graph file is not valid JSON: ") +
                                e.what());
  }
  try {
    if (doc.value("format", "") != "rdftfb-graph") {
      raise(ErrorCode::parse, "missing or wrong graph format marker");
    }

    DataflowGraph graph;
    graph.num_subbands = doc.value("num_subbands", 0);
    graph.max_factor = doc.value("m_max", 0);
    graph.prototype_length = doc.value("prototype_length", 0);

    for (const auto& line : doc.value("selects", json::array())) {
      graph.selects.push_back({line.at("name").get<std::string>(),
                               line.at("min").get<int>(),
                               line.at("max").get<int>(),
                               line.at("default").get<int>()});
    }

    const auto& nodes = doc.at("nodes");
    graph.nodes.reserve(nodes.size());
    graph.producers.reserve(nodes.size());
    for (const auto& entry : nodes) {
      const NodeId id = entry.at("id").get<NodeId>();
      if (id != static_cast<NodeId>(graph.nodes.size())) {
        raise(ErrorCode::parse, "node ids must be dense and ascending");
      }
      DfgNode node;
      node.id = id;
      node.kind = kind_from_string(entry.at("kind").get<std::string>());
      if (node.kind == NodeKind::const_mult) {
        const auto& coeff = entry.at("coeff");
        if (coeff.is_array()) {
          node.coeff = {coeff.at(0).get<double>(), coeff.at(1).get<double>()};
        } else {
          node.coeff = {coeff.get<double>(), 0.0};
        }
      }
      if (node.kind == NodeKind::mux) {
        const auto& sel = entry.at("sel");
        node.sel.line = sel.at("line").get<std::string>();
        node.sel.match = sel.at("match").get<int>();
        node.group = entry.value("group", "");
      }
      node.section = section_from_string(entry.value("section", "io"));
      node.label = entry.value("label", "");
      graph.nodes.push_back(std::move(node));
      graph.producers.push_back({kNoNode, kNoNode});
    }

    for (const auto& edge : doc.at("edges")) {
      graph.connect(edge.at("from").get<NodeId>(), edge.at("to").get<NodeId>(),
                    edge.at("port").get<int>());
    }
    for (const auto& id : doc.value("inputs", json::array())) {
      graph.stimulus_inputs.push_back(id.get<NodeId>());
    }
    for (const auto& id : doc.value("outputs", json::array())) {
      graph.outputs.push_back(id.get<NodeId>());
    }

    graph.validate();
    return graph;
  } catch (const json::exception& e) {
    raise(ErrorCode::parse, std::string("malformed graph document: ") +
                                e.what());
  }
}

DataflowGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::io, "cannot open graph file: " + path);
  return load_graph(in);
}

}  // namespace rdftfb
