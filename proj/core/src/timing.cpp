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
#include "rdftfb/timing.hpp"

#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "rdftfb/errors.hpp"

namespace rdftfb {

namespace {

bool is_boundary(NodeKind kind) {
  return kind == NodeKind::input || kind == NodeKind::reg;
}

bool is_combinational(NodeKind kind) {
  return kind == NodeKind::const_mult || kind == NodeKind::adder ||
         kind == NodeKind::mux;
}

}  // namespace

std::vector<NodeId> TimingReport::combinational_core(
    const DataflowGraph& g) const {
  std::vector<NodeId> core;
  for (NodeId id : critical_path) {
    if (is_combinational(g.nodes[static_cast<std::size_t>(id)].kind)) {
      core.push_back(id);
    }
  }
  return core;
}

TimingReport critical_path(const DataflowGraph& graph,
                           const DelayModel& model) {
  model.validate();
  const auto order = graph.combinational_order();
  const std::size_t n = graph.size();

  constexpr double kUnset = -1.0;
  std::vector<double> arrival(n, kUnset);
  std::vector<std::vector<NodeId>> path(n);
  // Hold analysis: shortest register-launched combinational delay.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> min_arrival(n, kInf);

  auto segment_arrival = [&](NodeId p) {
    return is_boundary(graph.nodes[static_cast<std::size_t>(p)].kind)
               ? 0.0
               : arrival[static_cast<std::size_t>(p)];
  };
  auto segment_path = [&](NodeId p) -> std::vector<NodeId> {
    if (is_boundary(graph.nodes[static_cast<std::size_t>(p)].kind)) {
      return {p};
    }
    return path[static_cast<std::size_t>(p)];
  };
  auto segment_min = [&](NodeId p) {
    const auto& node = graph.nodes[static_cast<std::size_t>(p)];
    if (node.kind == NodeKind::reg) return 0.0;
    if (node.kind == NodeKind::input) return kInf;  // not clock-launched
    return min_arrival[static_cast<std::size_t>(p)];
  };

  for (NodeId v : order) {
    const auto& node = graph.nodes[static_cast<std::size_t>(v)];
    if (!is_combinational(node.kind)) continue;
    const int ports = node_input_count(node.kind);
    double best = kUnset;
    std::vector<NodeId> best_path;
    double best_min = kInf;
    for (int p = 0; p < ports; ++p) {
      const NodeId u = graph.producers[static_cast<std::size_t>(v)]
                                      [static_cast<std::size_t>(p)];
      const double cand = segment_arrival(u) + model.routing;
      if (cand > best) {
        best = cand;
        best_path = segment_path(u);
      } else if (cand == best) {
        auto alt = segment_path(u);
        if (alt < best_path) best_path = std::move(alt);
      }
      const double mind = segment_min(u);
      if (mind + model.routing < best_min) best_min = mind + model.routing;
    }
    arrival[static_cast<std::size_t>(v)] =
        best + model.node_delay(node.kind);
    best_path.push_back(v);
    path[static_cast<std::size_t>(v)] = std::move(best_path);
    min_arrival[static_cast<std::size_t>(v)] =
        best_min + model.node_delay(node.kind);
  }

  TimingReport report;
  report.tau_cpd = kUnset;
  double min_delay = kInf;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& node = graph.nodes[v];
    const bool closes_path =
        node.kind == NodeKind::reg || node.kind == NodeKind::output;
    if (!closes_path) continue;
    const NodeId u = graph.producers[v][0];
    if (u == kNoNode) continue;
    const double total = segment_arrival(u) + model.routing;
    std::vector<NodeId> full = segment_path(u);
    full.push_back(static_cast<NodeId>(v));
    if (total > report.tau_cpd ||
        (total == report.tau_cpd && full < report.critical_path)) {
      report.tau_cpd = total;
      report.critical_path = std::move(full);
    }
    if (node.kind == NodeKind::reg) {
      const double mind = segment_min(u) + model.routing;
      if (mind < min_delay) min_delay = mind;
    }
  }
  if (report.tau_cpd == kUnset) {
    raise(ErrorCode::graph, "graph has no timed path to a register or output");
  }

  report.f_clk_max = report.tau_cpd > 0.0
                         ? 1.0 / report.tau_cpd
                         : std::numeric_limits<double>::infinity();
  report.t_clk_min = report.tau_cpd + model.t_setup + model.reg_clk_to_out;
  report.f_clk_max_registered = 1.0 / report.t_clk_min;
  report.t_clk_min_strict = report.tau_cpd + model.t_setup + model.t_hold;
  report.min_comb_delay = min_delay;
  report.hold_ok =
      !(min_delay < model.t_hold - model.reg_clk_to_out);  // inf passes
  return report;
}

void write_timing_csv(const DataflowGraph& graph, const DelayModel& model,
                      const TimingReport& report, std::ostream& out) {
  out << "path_rank,node_id,kind,delay,cum_delay\n";
  char line[128];
  int rank = 1;
  double cum = 0.0;
  for (NodeId id : report.critical_path) {
    const auto& node = graph.nodes[static_cast<std::size_t>(id)];
    const double d = model.node_delay(node.kind);
    cum += d;
    std::snprintf(line, sizeof(line), "%d,%d,%s,%.12g,%.12g\n", rank, id,
                  node_kind_name(node.kind), d, cum);
    out << line;
    ++rank;
  }
}

std::string format_timing_report(const DataflowGraph& graph,
                                 const DelayModel& model,
                                 const TimingReport& report,
                                 bool strict_period) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "critical path delay: %.6g units\n",
                report.tau_cpd);
  os << buf;
  std::snprintf(buf, sizeof(buf), "f_clk_max (1/tau): %.6g\n",
                report.f_clk_max);
  os << buf;
  const double period =
      strict_period ? report.t_clk_min_strict : report.t_clk_min;
  std::snprintf(buf, sizeof(buf),
                "min clock period: %.6g (%s)  [plain %.6g, strict %.6g]\n",
                period, strict_period ? "strict" : "setup+clk-to-out",
                report.t_clk_min, report.t_clk_min_strict);
  os << buf;
  std::snprintf(buf, sizeof(buf), "registered f_max: %.6g\n",
                report.f_clk_max_registered);
  os << buf;
  std::snprintf(buf, sizeof(buf), "hold check: %s (min comb delay %.6g)\n",
                report.hold_ok ? "ok" : "VIOLATED", report.min_comb_delay);
  os << buf;
  os << "path:";
  for (NodeId id : report.critical_path) {
    const auto& node = graph.nodes[static_cast<std::size_t>(id)];
    os << " " << id << ":" << node_kind_name(node.kind);
    if (!node.label.empty()) os << "(" << node.label << ")";
  }
  os << "\n";
  (void)model;
  return os.str();
}

}  // namespace rdftfb
