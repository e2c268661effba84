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

#include <cstddef>
#include <span>
#include <vector>

#include "pseudoref/lattice.hpp"
#include "pseudoref/parallel.hpp"
#include "pseudoref/random.hpp"
#include "pseudoref/similarity.hpp"
#include "pseudoref/types.hpp"

namespace pseudoref {

struct SelectionConfig {
  std::size_t k_prime = 100;  // per-example total, golds included
  double penalty_initial = 0.9;
  double penalty_step = 0.05;
  std::size_t min_generated = 100;
  std::size_t cap = 100000;  // enumeration cap per lattice
  bool use_schedule = true;  // false: a single run at penalty_initial

  // Throws ValidationError unless 0 < step < initial <= 1 (schedule on) or
  // 0 <= initial <= 1 (schedule off), and cap >= 1.
  void validate() const;
};

struct Generation {
  Lattice lattice;
  std::vector<Sentence> pseudo;  // distinct traversal strings that are not golds
  double final_penalty;
  int runs;
  bool exhausted;  // schedule ran out of positive penalties below min_generated
  bool truncated;  // enumeration hit cfg.cap
};

// Compresses and enumerates at penalty_initial, then at initial - step,
// initial - 2 * step, ... while fewer than min_generated pseudo-references
// come out. Penalty k is computed as initial - k * step. Stops before a
// non-positive penalty and returns the last run.
Generation generate_with_schedule(const ReferenceSet& refs, const SimilarityProvider& provider,
                                  const SelectionConfig& cfg, const ExecutionOptions& opts = {});

struct RankedSentence {
  Sentence sentence;
  double bleu;
};

// Sorted by descending BLEU against `golds`, ties by ascending string.
std::vector<RankedSentence> rank_by_bleu(std::span<const Sentence> candidates,
                                         std::span<const Sentence> golds);

// Keeps every pseudo-reference (in input order) when golds + pseudo fit in
// k_prime; otherwise the k_prime - |golds| best by BLEU, in rank order.
std::vector<Sentence> select_top(std::span<const Sentence> pseudo,
                                 std::span<const Sentence> golds, std::size_t k_prime);

// Golds followed by the selected pseudo-references of one example.
ReferenceSet augment_example(const ReferenceSet& refs, const SimilarityProvider& provider,
                             const SelectionConfig& cfg, const ExecutionOptions& opts = {});

// augment_example over a corpus, parallel across examples (opts.threads),
// output in corpus order.
Corpus augment_corpus(const Corpus& corpus, const SimilarityProvider& provider,
                      const SelectionConfig& cfg, const ExecutionOptions& opts = {});

// One entry per example; each reference picked by EpochRng(seed).below(K) in
// corpus order.
ExpandedDataset convert_sample_one(const Corpus& corpus, const EpochSeed& seed);

// Every reference of every example, grouped by example in corpus order.
ExpandedDataset convert_uniform(const Corpus& corpus);

// convert_uniform(corpus) permuted by EpochRng(seed).shuffle.
ExpandedDataset convert_shuffle(const Corpus& corpus, const EpochSeed& seed);

}  // namespace pseudoref
