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
#include <benchmark/benchmark.h>

#include "rdftfb/filter_design.hpp"
#include "rdftfb/graph_build.hpp"
#include "rdftfb/pipeline.hpp"
#include "rdftfb/simulate.hpp"
#include "rdftfb/stimulus.hpp"
#include "rdftfb/timing.hpp"

using namespace rdftfb;

namespace {

const DataflowGraph& reference_graph() {
  static const DataflowGraph g = [] {
    const auto proto =
        design_kaiser(FilterSpec::for_subbands(8, 0.1, 0.04, 50.0));
    return build_rdftfb_graph(proto, 8, 5);
  }();
  return g;
}

void GraphBuild(benchmark::State& state) {
  const auto proto =
      design_kaiser(FilterSpec::for_subbands(8, 0.1, 0.04, 50.0));
  for (auto _ : state) {
    auto g = build_rdftfb_graph(proto, 8, 5);
    benchmark::DoNotOptimize(g.nodes.data());
  }
}

void CriticalPath(benchmark::State& state) {
  const auto& g = reference_graph();
  const DelayModel model;
  for (auto _ : state) {
    auto report = critical_path(g, model);
    benchmark::DoNotOptimize(report.tau_cpd);
  }
}

void PipelineInsertion(benchmark::State& state) {
  const auto& g = reference_graph();
  const DelayModel model;
  for (auto _ : state) {
    auto result = insert_pipeline_registers(g, model, 2.0);
    benchmark::DoNotOptimize(result.registers_added);
  }
}

void SimulateCycles(benchmark::State& state) {
  const auto& g = reference_graph();
  const auto x = random_stream(3, 512);
  for (auto _ : state) {
    auto result = simulate(g, x, 3, 512);
    benchmark::DoNotOptimize(result.outputs.data());
  }
  state.SetItemsProcessed(state.iterations() * 512);
}

}  // namespace

BENCHMARK(GraphBuild);
BENCHMARK(CriticalPath);
BENCHMARK(PipelineInsertion);
BENCHMARK(SimulateCycles);
