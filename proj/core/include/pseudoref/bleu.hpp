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

#include <array>
#include <span>

#include "pseudoref/types.hpp"

namespace pseudoref {

inline constexpr int kBleuMaxOrder = 4;

struct BleuScore {
  double value = 0.0;  // in [0, 100]
  std::array<double, kBleuMaxOrder> precisions{};
  double brevity_penalty = 0.0;
  // Orders actually combined: min(4, candidate length). Orders above it have
  // no candidate n-grams and are left out of the geometric mean.
  int effective_order = 0;
};

// Sentence-level BLEU-4 against several references.
//  - n-gram counts are clipped by the maximum count in any single reference;
//  - a zero numerator for n >= 2 is replaced by 1 / (2 * denominator), while a
//    zero unigram precision yields a score of 0;
//  - brevity penalty exp(1 - r / c) uses the reference length closest to the
//    candidate length c (ties to the shorter one), and is 1 whenever some
//    reference is no longer than the candidate.
// An empty candidate scores 0 with brevity_penalty 0. `refs` must be
// non-empty (ValidationError otherwise).
BleuScore sentence_bleu(std::span<const Token> candidate, std::span<const Sentence> refs);

inline BleuScore sentence_bleu(const Sentence& candidate, std::span<const Sentence> refs) {
  return sentence_bleu(candidate.tokens(), refs);
}

}  // namespace pseudoref
