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

// rdftfb -- reconfigurable DFT filter bank workbench.
//
// Subcommands: design, respond, decimate, channelize, graph
// (build|timing|pipeline|simulate|compare), report, stimulus.
// Exit status: 0 success, 1 failure (one `error[E_*]: ...` line on
// stderr), 2 usage problems. `graph compare` additionally exits 1 when
// the graphs are not equivalent.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rdftfb/cdm.hpp"
#include "rdftfb/channelizer.hpp"
#include "rdftfb/equivalence.hpp"
#include "rdftfb/errors.hpp"
#include "rdftfb/filter_design.hpp"
#include "rdftfb/frequency_response.hpp"
#include "rdftfb/graph_build.hpp"
#include "rdftfb/graph_io.hpp"
#include "rdftfb/pipeline.hpp"
#include "rdftfb/polyphase.hpp"
#include "rdftfb/resources.hpp"
#include "rdftfb/sample_io.hpp"
#include "rdftfb/simulate.hpp"
#include "rdftfb/stimulus.hpp"
#include "rdftfb/timing.hpp"

namespace {

using namespace rdftfb;

/// Relative output paths land in $RDFTFB_OUT_DIR when it is set.
std::string out_path(const std::string& path) {
  const char* base = std::getenv("RDFTFB_OUT_DIR");
  if (base == nullptr || *base == '\0' || path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base) / p).string();
}

std::ofstream open_out(const std::string& path) {
  const std::string resolved = out_path(path);
  std::ofstream out(resolved);
  if (!out) raise(ErrorCode::io, "cannot write: " + resolved);
  return out;
}

struct DelayFlags {
  DelayModel model;
  void attach(CLI::App* cmd) {
    cmd->add_option("--mult", model.const_mult, "constant-multiplier delay");
    cmd->add_option("--add", model.adder, "adder delay");
    cmd->add_option("--mux", model.mux, "multiplexer delay");
    cmd->add_option("--clk2out", model.reg_clk_to_out,
                    "register clock-to-out");
    cmd->add_option("--setup", model.t_setup, "register setup time");
    cmd->add_option("--hold", model.t_hold, "register hold time");
    cmd->add_option("--routing", model.routing, "per-edge routing delay");
  }
};

PrototypeFilter load_prototype(const std::string& path) {
  auto proto = load_coefficients_file(path);
  if (!proto.symmetric) {
    std::cerr << "warning: coefficients are not symmetric (no linear phase)\n";
  }
  return proto;
}

void print_spec_report(const PrototypeFilter& proto, const FilterSpec& spec) {
  const auto check = verify_spec(proto, spec);
  std::printf("taps: %zu\n", proto.length());
  std::printf("passband deviation: %.4f dB (limit %.4f) %s\n",
              check.passband_deviation_db, spec.passband_ripple_db,
              check.passband_ok ? "PASS" : "FAIL");
  std::printf("stopband attenuation: %.2f dB (limit %.2f) %s\n",
              check.stopband_atten_db, spec.stopband_atten_db,
              check.stopband_ok ? "PASS" : "FAIL");
  std::printf("-6 dB edge: %.6f (nominal %.6f)\n", check.edge_minus6db,
              1.0 / spec.num_subbands);
  std::printf("spec check: %s\n", check.pass() ? "PASS" : "FAIL");
}

int cmd_design(const FilterSpec& spec, int m_max, int max_length,
               const std::string& out) {
  spec.validate();
  for (const auto& note : spec.warnings()) {
    std::cerr << "warning: " << note << "\n";
  }
  KaiserOptions options;
  options.max_length = max_length;
  const auto proto = design_kaiser(spec, options);
  if (m_max > 1) ensure_factor_valid(proto, m_max);

  std::ostringstream comment;
  comment << "kaiser lowpass, taps=" << proto.length()
          << " cutoff=" << spec.cutoff() << " subbands=" << spec.num_subbands;
  auto file = open_out(out);
  save_coefficients(proto, file, comment.str());
  print_spec_report(proto, spec);
  std::printf("wrote %s\n", out_path(out).c_str());
  return 0;
}

int cmd_respond(const std::string& coeffs, int factor, int points,
                int subband, int n, const std::string& out) {
  const auto proto = load_prototype(coeffs);
  FrequencyResponse resp;
  if (subband >= 0) {
    if (n < 2) raise(ErrorCode::usage, "--subband requires --n");
    resp = subband_response(proto, n, subband, factor, points);
  } else {
    resp = decimated_response(proto, factor, points);
  }
  auto file = open_out(out);
  write_csv(resp, file);
  std::printf("wrote %s\n", out_path(out).c_str());
  return 0;
}

int cmd_decimate(const std::string& coeffs, int factor,
                 const std::string& out) {
  const auto proto = load_prototype(coeffs);
  const auto decimated = decimate_coefficients(proto, factor);
  PrototypeFilter result;
  result.coeffs = decimated.coeffs;
  result.symmetric = PrototypeFilter::is_symmetric(result.coeffs);
  if (proto.nominal_bandwidth.has_value()) {
    const double stretched = factor * *proto.nominal_bandwidth;
    if (stretched < 1.0) result.nominal_bandwidth = stretched;
  }
  std::ostringstream comment;
  comment << "decimated by " << factor << " from " << decimated.source_length
          << " taps";
  auto file = open_out(out);
  save_coefficients(result, file, comment.str());
  std::printf("wrote %s (%zu taps)\n", out_path(out).c_str(),
              result.coeffs.size());
  return 0;
}

int cmd_channelize(const std::string& input, const std::string& coeffs, int n,
                   int factor, const std::string& out_dir,
                   const std::string& wide) {
  const auto samples = read_samples_file(input);
  const auto proto = load_prototype(coeffs);
  auto bank = polyphase_decompose(proto, n);
  Channelizer chan(std::move(bank), CdmConfig{factor, std::max(factor, 1)});

  std::vector<std::vector<std::complex<double>>> outputs(
      static_cast<std::size_t>(n));
  for (const auto& x : samples) {
    const auto frame = chan.process(x);
    for (int k = 0; k < n; ++k) {
      outputs[static_cast<std::size_t>(k)].push_back(
          frame.outputs[static_cast<std::size_t>(k)]);
    }
  }

  if (!wide.empty()) {
    auto file = open_out(wide);
    write_wide_outputs(outputs, file);
    std::printf("wrote %s\n", out_path(wide).c_str());
  } else {
    const std::string dir = out_path(out_dir.empty() ? "." : out_dir);
    std::filesystem::create_directories(dir);
    for (int k = 0; k < n; ++k) {
      const std::string path =
          (std::filesystem::path(dir) / ("y_" + std::to_string(k) + ".csv"))
              .string();
      std::ofstream file(path);
      if (!file) raise(ErrorCode::io, "cannot write: " + path);
      write_subband_output(outputs[static_cast<std::size_t>(k)], file);
    }
    std::printf("wrote %d subband files under %s\n", n, dir.c_str());
  }
  return 0;
}

int cmd_graph_build(const std::string& coeffs, int n, int m_max,
                    const std::string& out) {
  const auto proto = load_prototype(coeffs);
  const auto graph = build_rdftfb_graph(proto, n, m_max);
  auto file = open_out(out);
  save_graph(graph, file);
  const auto res = count_resources(graph);
  std::printf(
      "graph: %zu nodes, %d coefficient multipliers, %d rotators, %d adders, "
      "%d mux groups (%d nodes), %d registers\n",
      graph.size(), res.coefficient_multipliers, res.rotation_multipliers,
      res.adders, res.mux_select_groups, res.muxes, res.registers);
  std::printf("wrote %s\n", out_path(out).c_str());
  return 0;
}

int cmd_graph_timing(const std::string& path, const DelayModel& model,
                     const std::string& csv, bool strict) {
  const auto graph = load_graph_file(path);
  const auto report = critical_path(graph, model);
  std::fputs(format_timing_report(graph, model, report, strict).c_str(),
             stdout);
  if (!csv.empty()) {
    auto file = open_out(csv);
    write_timing_csv(graph, model, report, file);
    std::printf("wrote %s\n", out_path(csv).c_str());
  }
  return 0;
}

int cmd_graph_pipeline(const std::string& path, const DelayModel& model,
                       double budget, const std::string& scope,
                       const std::string& out) {
  const auto graph = load_graph_file(path);
  const PipelineScope s = scope == "filter" ? PipelineScope::filter_only
                                            : PipelineScope::full;
  const auto result = insert_pipeline_registers(graph, model, budget, s);
  auto file = open_out(out);
  save_graph(result.graph, file);
  std::printf("pipelined: latency D=%d, registers added %d\n", result.latency,
              result.registers_added);
  std::printf("wrote %s\n", out_path(out).c_str());
  return 0;
}

int cmd_graph_simulate(const std::string& path, const std::string& input,
                       int factor, int cycles, const std::string& out) {
  const auto graph = load_graph_file(path);
  const auto samples = read_samples_file(input);
  if (cycles <= 0) cycles = static_cast<int>(samples.size());
  const auto result = simulate(graph, samples, factor, cycles);
  auto file = open_out(out);
  write_wide_outputs(result.outputs, file);
  std::printf("wrote %s\n", out_path(out).c_str());
  return 0;
}

int cmd_graph_compare(const std::string& path1, const std::string& path2,
                      int streams, int length, std::uint64_t seed,
                      int factor) {
  const auto g1 = load_graph_file(path1);
  const auto g2 = load_graph_file(path2);

  std::vector<std::vector<std::complex<double>>> stimuli;
  stimuli.push_back(impulse_stream(static_cast<std::size_t>(length)));
  for (int s = 0; s < streams; ++s) {
    stimuli.push_back(random_stream(seed + static_cast<std::uint64_t>(s),
                                    static_cast<std::size_t>(length)));
  }

  std::map<std::string, int> selects;
  for (const auto& line : g1.selects) selects[line.name] = factor;

  const auto result = check_equivalence(g1, g2, stimuli, selects);
  if (result.equivalent) {
    std::printf("EQUIVALENT, latency D=%d (%d stimuli, sel=%d)\n",
                result.latency, static_cast<int>(stimuli.size()), factor);
    return 0;
  }
  const auto& m = *result.counterexample;
  std::printf(
      "NOT EQUIVALENT: stimulus %d output %d cycle %d expected (%.17g,%.17g) "
      "got (%.17g,%.17g)\n",
      m.stimulus, m.output, m.cycle, m.expected.real(), m.expected.imag(),
      m.actual.real(), m.actual.imag());
  return 1;
}

int cmd_report(const std::string& coeffs, int n, int m_max, double budget,
               const DelayModel& model) {
  const auto proto = load_prototype(coeffs);
  const auto graph = build_rdftfb_graph(proto, n, m_max);
  const auto res = count_resources(graph);

  const auto base = critical_path(graph, model);
  const auto filter_only =
      insert_pipeline_registers(graph, model, budget,
                                PipelineScope::filter_only);
  const auto full = insert_pipeline_registers(graph, model, budget);
  const auto t_filter = critical_path(filter_only.graph, model);
  const auto t_full = critical_path(full.graph, model);
  const auto res_filter = count_resources(filter_only.graph);
  const auto res_full = count_resources(full.graph);

  std::printf("architecture comparison (model units, not MHz/W)\n");
  std::printf("%-28s %10s %10s %10s %8s %8s\n", "variant", "tau_cpd",
              "f_clk_max", "improve", "regs", "latency");
  auto row = [&](const char* name, const TimingReport& t, int regs, int d) {
    std::printf("%-28s %10.4g %10.4g %9.3gx %8d %8d\n", name, t.tau_cpd,
                t.f_clk_max, t.f_clk_max / base.f_clk_max, regs, d);
  };
  row("original", base, res.registers, 0);
  row("filter-pipelined", t_filter, res_filter.registers,
      filter_only.latency);
  row("fully-pipelined", t_full, res_full.registers, full.latency);

  std::printf("\nresources: %d coefficient multipliers (ceil(L/2)=%d), "
              "%d rotators, %d adders, %d mux select groups, %d mux nodes\n",
              res.coefficient_multipliers, (graph.prototype_length + 1) / 2,
              res.rotation_multipliers, res.adders, res.mux_select_groups,
              res.muxes);
  std::printf("reconfiguration adder overhead: %lld (ceiling) / %lld (floor)\n",
              extra_adders(graph.prototype_length, m_max),
              extra_adders_floor(graph.prototype_length, m_max));
  std::printf("note: device MHz and watt figures are not modeled; only "
              "operator-delay ratios and count directions are.\n");
  return 0;
}

int cmd_stimulus(int length, std::uint64_t seed, const std::string& out) {
  const auto samples =
      random_stream(seed, static_cast<std::size_t>(length));
  auto file = open_out(out);
  write_samples(samples, file);
  std::printf("wrote %s\n", out_path(out).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reconfigurable DFT filter bank workbench"};
  app.require_subcommand(1);

  // design
  auto* design = app.add_subcommand(
      "design", "design the Kaiser-window lowpass prototype");
  int d_n = 8;
  double d_delta = 0.1, d_ap = 0.04, d_as = 50.0;
  double d_pb = -1.0, d_sb = -1.0;
  int d_mmax = 1, d_maxlen = 4096;
  std::string d_out;
  design->add_option("--n", d_n, "subband count N")->required();
  design->add_option("--delta", d_delta, "transition width")->required();
  design->add_option("--ap", d_ap, "passband ripple limit, dB")->required();
  design->add_option("--as", d_as, "stopband attenuation, dB")->required();
  design->add_option("--passband-edge", d_pb, "override passband edge");
  design->add_option("--stopband-edge", d_sb, "override stopband edge");
  design->add_option("--m-max", d_mmax,
                     "verify this decimation ceiling against the design");
  design->add_option("--max-length", d_maxlen, "tap-count ceiling");
  design->add_option("-o,--out", d_out, "coefficient file")->required();

  // respond
  auto* respond = app.add_subcommand(
      "respond", "frequency response of the (decimated) prototype");
  std::string r_coeffs, r_out;
  int r_cdm = 1, r_points = 4096, r_subband = -1, r_n = 0;
  respond->add_option("--coeffs", r_coeffs, "coefficient file")->required();
  respond->add_option("--cdm", r_cdm, "decimation factor M");
  respond->add_option("--points", r_points, "grid points");
  respond->add_option("--subband", r_subband, "subband index k");
  respond->add_option("--n", r_n, "subband count (with --subband)");
  respond->add_option("-o,--out", r_out, "response CSV")->required();

  // decimate
  auto* decimate = app.add_subcommand(
      "decimate", "export the coefficient-decimated filter");
  std::string dc_coeffs, dc_out;
  int dc_cdm = 1;
  decimate->add_option("--coeffs", dc_coeffs, "coefficient file")->required();
  decimate->add_option("--cdm", dc_cdm, "decimation factor M")->required();
  decimate->add_option("-o,--out", dc_out, "output file")->required();

  // channelize
  auto* channelize = app.add_subcommand(
      "channelize", "run the streaming channelizer over a sample file");
  std::string c_input, c_coeffs, c_dir, c_wide;
  int c_n = 8, c_cdm = 1;
  channelize->add_option("--input", c_input, "input CSV (re,im)")->required();
  channelize->add_option("--coeffs", c_coeffs, "coefficient file")->required();
  channelize->add_option("--n", c_n, "subband count N")->required();
  channelize->add_option("--cdm", c_cdm, "decimation factor M");
  channelize->add_option("--out-dir", c_dir, "directory for y_k.csv files");
  channelize->add_option("--wide", c_wide, "single wide CSV instead");

  // graph
  auto* graph = app.add_subcommand("graph", "register-level hardware model");
  graph->require_subcommand(1);

  auto* gbuild = graph->add_subcommand("build", "build the netlist");
  std::string gb_coeffs, gb_out;
  int gb_n = 8, gb_mmax = 1;
  gbuild->add_option("--coeffs", gb_coeffs, "coefficient file")->required();
  gbuild->add_option("--n", gb_n, "subband count N")->required();
  gbuild->add_option("--m-max", gb_mmax, "decimation ceiling");
  gbuild->add_option("-o,--out", gb_out, "graph JSON file")->required();

  auto* gtiming = graph->add_subcommand("timing", "critical-path report");
  std::string gt_graph, gt_csv;
  bool gt_strict = false;
  DelayFlags gt_delays;
  gtiming->add_option("--graph", gt_graph, "graph JSON file")->required();
  gtiming->add_option("--csv", gt_csv, "write path CSV");
  gtiming->add_flag("--strict-period", gt_strict,
                    "headline period charges hold time too");
  gt_delays.attach(gtiming);

  auto* gpipe = graph->add_subcommand("pipeline", "insert pipeline registers");
  std::string gp_graph, gp_out, gp_scope = "all";
  double gp_budget = 2.0;
  DelayFlags gp_delays;
  gpipe->add_option("--graph", gp_graph, "graph JSON file")->required();
  gpipe->add_option("--budget", gp_budget, "stage delay budget")->required();
  gpipe->add_option("--scope", gp_scope, "all|filter")
      ->check(CLI::IsMember({"all", "filter"}));
  gpipe->add_option("-o,--out", gp_out, "pipelined graph file")->required();
  gp_delays.attach(gpipe);

  auto* gsim = graph->add_subcommand("simulate", "cycle-accurate simulation");
  std::string gs_graph, gs_input, gs_out;
  int gs_cdm = 1, gs_cycles = 0;
  gsim->add_option("--graph", gs_graph, "graph JSON file")->required();
  gsim->add_option("--input", gs_input, "input CSV (re,im)")->required();
  gsim->add_option("--cdm", gs_cdm, "decimation factor (drives selects)");
  gsim->add_option("--cycles", gs_cycles, "cycles to run (default: input length)");
  gsim->add_option("-o,--out", gs_out, "wide output CSV")->required();

  auto* gcomp = graph->add_subcommand(
      "compare", "bit-exact equivalence check modulo latency");
  std::string gc_a, gc_b;
  int gc_streams = 50, gc_length = 512, gc_cdm = 1;
  std::uint64_t gc_seed = 1;
  gcomp->add_option("--graph", gc_a, "first graph")->required();
  gcomp->add_option("--graph2", gc_b, "second graph")->required();
  gcomp->add_option("--streams", gc_streams, "random stimuli count");
  gcomp->add_option("--length", gc_length, "stimulus length");
  gcomp->add_option("--seed", gc_seed, "stimulus seed");
  gcomp->add_option("--cdm", gc_cdm, "select value for both graphs");

  // report
  auto* report = app.add_subcommand(
      "report", "original vs pipelined comparison table");
  std::string rp_coeffs;
  int rp_n = 8, rp_mmax = 5;
  double rp_budget = 2.0;
  DelayFlags rp_delays;
  report->add_option("--coeffs", rp_coeffs, "coefficient file")->required();
  report->add_option("--n", rp_n, "subband count N")->required();
  report->add_option("--m-max", rp_mmax, "decimation ceiling");
  report->add_option("--budget", rp_budget, "stage delay budget");
  rp_delays.attach(report);

  // stimulus
  auto* stimulus = app.add_subcommand(
      "stimulus", "seeded portable random complex stream");
  int st_length = 1024;
  std::uint64_t st_seed = 1;
  std::string st_out;
  stimulus->add_option("--length", st_length, "sample count")->required();
  stimulus->add_option("--seed", st_seed, "generator seed");
  stimulus->add_option("-o,--out", st_out, "output CSV")->required();

  try {
    app.parse(argc, argv);

    if (design->parsed()) {
      if ((d_pb > 0.0) != (d_sb > 0.0)) {
        raise(ErrorCode::usage,
              "--passband-edge and --stopband-edge must be given together");
      }
      FilterSpec spec;
      if (d_pb > 0.0 && d_sb > 0.0) {
        spec.num_subbands = d_n;
        spec.passband_edge = d_pb;
        spec.stopband_edge = d_sb;
        spec.passband_ripple_db = d_ap;
        spec.stopband_atten_db = d_as;
      } else {
        spec = FilterSpec::for_subbands(d_n, d_delta, d_ap, d_as);
      }
      return cmd_design(spec, d_mmax, d_maxlen, d_out);
    }
    if (respond->parsed()) {
      return cmd_respond(r_coeffs, r_cdm, r_points, r_subband, r_n, r_out);
    }
    if (decimate->parsed()) return cmd_decimate(dc_coeffs, dc_cdm, dc_out);
    if (channelize->parsed()) {
      return cmd_channelize(c_input, c_coeffs, c_n, c_cdm, c_dir, c_wide);
    }
    if (gbuild->parsed()) return cmd_graph_build(gb_coeffs, gb_n, gb_mmax, gb_out);
    if (gtiming->parsed()) {
      return cmd_graph_timing(gt_graph, gt_delays.model, gt_csv, gt_strict);
    }
    if (gpipe->parsed()) {
      return cmd_graph_pipeline(gp_graph, gp_delays.model, gp_budget, gp_scope,
                                gp_out);
    }
    if (gsim->parsed()) {
      return cmd_graph_simulate(gs_graph, gs_input, gs_cdm, gs_cycles, gs_out);
    }
    if (gcomp->parsed()) {
      return cmd_graph_compare(gc_a, gc_b, gc_streams, gc_length, gc_seed,
                               gc_cdm);
    }
    if (report->parsed()) {
      return cmd_report(rp_coeffs, rp_n, rp_mmax, rp_budget, rp_delays.model);
    }
    if (stimulus->parsed()) return cmd_stimulus(st_length, st_seed, st_out);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error[E_USAGE]: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error[" << error_code_name(e.code()) << "]: " << e.what()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[E_INTERNAL]: " << e.what() << "\n";
    return 1;
  }
}
