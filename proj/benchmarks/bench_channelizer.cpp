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

#include "rdftfb/channelizer.hpp"
#include "rdftfb/filter_design.hpp"
#include "rdftfb/polyphase.hpp"
#include "rdftfb/stimulus.hpp"

using namespace rdftfb;

namespace {

const PrototypeFilter& proto(int n) {
  static const PrototypeFilter p8 =
      design_kaiser(FilterSpec::for_subbands(8, 0.1, 0.04, 50.0));
  static const PrototypeFilter p16 =
      design_kaiser(FilterSpec::for_subbands(16, 0.05, 0.04, 50.0));
  return n == 16 ? p16 : p8;
}

void ChannelizerStream(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int factor = static_cast<int>(state.range(1));
  auto bank = polyphase_decompose(proto(n), n);
  Channelizer chan(bank, {factor, 5});
  const auto x = random_stream(1, 4096);
  for (auto _ : state) {
    for (const auto& s : x) {
      auto frame = chan.process(s);
      benchmark::DoNotOptimize(frame.outputs.data());
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(x.size()));
}

void ReferenceSubband(benchmark::State& state) {
  const auto& p = proto(8);
  const auto x = random_stream(2, 1024);
  for (auto _ : state) {
    auto y = reference_subband(x, p.coeffs, 3, 8);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(x.size()));
}

}  // namespace

BENCHMARK(ChannelizerStream)
    ->Args({8, 1})
    ->Args({8, 5})
    ->Args({16, 1});
BENCHMARK(ReferenceSubband);
