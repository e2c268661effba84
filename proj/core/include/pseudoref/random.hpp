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

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace pseudoref {

// A (base seed, epoch) pair. Each pair selects an independent random stream.
struct EpochSeed {
  std::uint64_t base_seed = 0;
  std::uint64_t epoch = 0;

  // splitmix64(base_seed + (epoch + 1) * 0x9E3779B97F4A7C15), the SplitMix64
  // output function applied to a golden-ratio offset of the base seed.
  std::uint64_t stream_seed() const noexcept;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Portable stream: std::mt19937_64 (its output sequence is fixed by the
// standard) with bounded draws by rejection sampling, so identical seeds give
// identical results on every platform and standard library.
class EpochRng {
 public:
  explicit EpochRng(const EpochSeed& seed) : engine_(seed.stream_seed()) {}

  // Uniform integer in [0, bound). bound must be >= 1.
  std::uint64_t below(std::uint64_t bound);

  // Fisher-Yates, drawing below(i + 1) for i = n-1 down to 1.
  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pseudoref
