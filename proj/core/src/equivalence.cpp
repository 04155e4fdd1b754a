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
#include "rdftfb/equivalence.hpp"

#include <algorithm>

#include "rdftfb/errors.hpp"
#include "rdftfb/simulate.hpp"

namespace rdftfb {

namespace {

int register_count(const DataflowGraph& g) {
  int count = 0;
  for (const auto& node : g.nodes) {
    if (node.kind == NodeKind::reg) ++count;
  }
  return count;
}

bool bit_equal(const std::complex<double>& a, const std::complex<double>& b) {
  return a.real() == b.real() && a.imag() == b.imag();
}

}  // namespace

EquivalenceResult check_equivalence(
    const DataflowGraph& g1, const DataflowGraph& g2,
    const std::vector<std::vector<std::complex<double>>>& stimuli,
    const std::map<std::string, int>& selects) {
  if (g1.outputs.size() != g2.outputs.size() ||
      g1.stimulus_inputs.size() != g2.stimulus_inputs.size()) {
    raise(ErrorCode::graph, "graphs differ in input/output arity");
  }
  if (stimuli.empty()) {
    raise(ErrorCode::invalid, "equivalence check needs at least one stimulus");
  }

  const int max_shift = register_count(g2);
  std::size_t longest = 0;
  for (const auto& s : stimuli) longest = std::max(longest, s.size());
  const int cycles = static_cast<int>(longest) + max_shift;

  std::vector<SimulationResult> runs1, runs2;
  runs1.reserve(stimuli.size());
  runs2.reserve(stimuli.size());
  for (const auto& s : stimuli) {
    runs1.push_back(simulate(g1, s, selects, cycles));
    runs2.push_back(simulate(g2, s, selects, cycles));
  }

  const std::size_t n_out = g1.outputs.size();

  // First mismatch of candidate shift d, if any.
  auto try_shift = [&](int d) -> std::optional<Mismatch> {
    for (std::size_t s = 0; s < stimuli.size(); ++s) {
      for (std::size_t k = 0; k < n_out; ++k) {
        const auto& a = runs1[s].outputs[k];
        const auto& b = runs2[s].outputs[k];
        const int span = cycles - d;
        for (int t = 0; t < span; ++t) {
          const auto& expected = a[static_cast<std::size_t>(t)];
          const auto& actual = b[static_cast<std::size_t>(t + d)];
          if (!bit_equal(expected, actual)) {
            return Mismatch{static_cast<int>(s), static_cast<int>(k), t + d,
                            expected, actual};
          }
        }
      }
    }
    return std::nullopt;
  };

  EquivalenceResult result;
  std::optional<Mismatch> deepest;
  int deepest_shift = 0;
  for (int d = 0; d <= max_shift; ++d) {
    auto mismatch = try_shift(d);
    if (!mismatch.has_value()) {
      result.equivalent = true;
      result.latency = d;
      return result;
    }
    if (!deepest.has_value() || mismatch->cycle - d > deepest->cycle - deepest_shift) {
      deepest = mismatch;
      deepest_shift = d;
    }
  }
  result.equivalent = false;
  result.counterexample = deepest;
  return result;
}

}  // namespace rdftfb
