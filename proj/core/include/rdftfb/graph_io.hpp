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

#include "rdftfb/dfg.hpp"

namespace rdftfb {

/// JSON graph document. Schema (see docs/graph-format.md):
///   { "format": "rdftfb-graph", "version": 1,
///     "num_subbands": N, "m_max": M, "prototype_length": L,
///     "selects": [{"name","min","max","default"}...],
///     "inputs": [id...], "outputs": [id...],
///     "nodes": [{"id","kind","coeff"?,"sel"?,"group"?,"section"?,"label"?}...],
///     "edges": [{"from","to","port"}...] }
/// A real coefficient serializes as a number, a complex one as [re, im].
/// Doubles round-trip exactly.
void save_graph(const DataflowGraph& graph, std::ostream& out);
void save_graph_file(const DataflowGraph& graph, const std::string& path);

DataflowGraph load_graph(std::istream& in);
DataflowGraph load_graph_file(const std::string& path);

}  // namespace rdftfb
