// Copyright 2026 The pseudoref Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pseudoref/align.hpp"

namespace pr = pseudoref;

static pr::SubstitutionMatrix make_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> cell(0.0, 1.0);
  std::vector<double> raw(n * n);
  for (auto& x : raw) x = cell(rng);
  return pr::SubstitutionMatrix(n, n, std::move(raw), 0.5);
}

static void BM_DpAlign(benchmark::State& state) {
  const auto m = make_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pr::dp_align(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DpAlign)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNSquared);
