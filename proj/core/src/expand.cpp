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

#include "pseudoref/expand.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>

#include "pseudoref/bleu.hpp"
#include "pseudoref/error.hpp"

namespace pseudoref {

void SelectionConfig::validate() const {
  if (cap == 0) throw ValidationError("enumeration cap must be at least 1");
  if (use_schedule) {
    if (!(penalty_step > 0.0 && penalty_step < penalty_initial && penalty_initial <= 1.0)) {
      throw ValidationError("penalty schedule needs 0 < step < initial <= 1");
    }
  } else if (!(penalty_initial >= 0.0 && penalty_initial <= 1.0)) {
    throw ValidationError("penalty must lie in [0, 1]");
  }
}

namespace {

// Penalties closer than this to zero count as exhausted.
constexpr double kPenaltyFloor = 1e-9;

std::vector<Sentence> drop_golds(std::vector<Sentence> paths, const ReferenceSet& refs) {
  std::unordered_set<std::string> golds;
  for (const auto& g : refs.refs()) golds.insert(g.text());
  std::vector<Sentence> out;
  out.reserve(paths.size());
  for (auto& s : paths) {
    if (!golds.count(s.text())) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Generation generate_with_schedule(const ReferenceSet& refs, const SimilarityProvider& provider,
                                  const SelectionConfig& cfg, const ExecutionOptions& opts) {
  cfg.validate();
  int runs = 0;
  for (;;) {
    const double penalty = cfg.penalty_initial - runs * cfg.penalty_step;
    auto compression = compress(refs, provider, penalty, opts);
    auto paths = enumerate_paths(compression.lattice, cfg.cap);
    auto pseudo = drop_golds(std::move(paths.sentences), refs);
    ++runs;

    const bool enough = pseudo.size() >= cfg.min_generated;
    const double next = cfg.penalty_initial - runs * cfg.penalty_step;
    const bool exhausted = !enough && (!cfg.use_schedule || next <= kPenaltyFloor);
    if (enough || exhausted || !cfg.use_schedule) {
      return Generation{std::move(compression.lattice), std::move(pseudo), penalty, runs,
                        exhausted && cfg.use_schedule, paths.truncated};
    }
  }
}

std::vector<RankedSentence> rank_by_bleu(std::span<const Sentence> candidates,
                                         std::span<const Sentence> golds) {
  struct Key {
    double bleu;
    std::string text;
    std::size_t index;
  };
  std::vector<Key> keys;
  keys.reserve(candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    keys.push_back({sentence_bleu(candidates[k], golds).value, candidates[k].text(), k});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.bleu != b.bleu) return a.bleu > b.bleu;
    if (a.text != b.text) return a.text < b.text;
    return a.index < b.index;
  });
  std::vector<RankedSentence> ranked;
  ranked.reserve(keys.size());
  for (const auto& key : keys) ranked.push_back({candidates[key.index], key.bleu});
  return ranked;
}

std::vector<Sentence> select_top(std::span<const Sentence> pseudo,
                                 std::span<const Sentence> golds, std::size_t k_prime) {
  if (k_prime < golds.size()) {
    throw ValidationError("k_prime (" + std::to_string(k_prime) +
                          ") is smaller than the number of gold references (" +
                          std::to_string(golds.size()) + ")");
  }
  if (golds.size() + pseudo.size() <= k_prime) return {pseudo.begin(), pseudo.end()};
  const std::size_t keep = k_prime - golds.size();
  std::vector<Sentence> out;
  out.reserve(keep);
  if (keep == 0) return out;
  auto ranked = rank_by_bleu(pseudo, golds);
  for (std::size_t k = 0; k < keep; ++k) out.push_back(std::move(ranked[k].sentence));
  return out;
}

ReferenceSet augment_example(const ReferenceSet& refs, const SimilarityProvider& provider,
                             const SelectionConfig& cfg, const ExecutionOptions& opts) {
  auto generation = generate_with_schedule(refs, provider, cfg, opts);
  auto selected = select_top(generation.pseudo, refs.refs(), std::max(cfg.k_prime, refs.size()));
  std::vector<Sentence> all(refs.refs().begin(), refs.refs().end());
  for (auto& s : selected) {
    all.emplace_back(ReferenceSet::sentence_id(refs.example_id(), all.size()),
                     std::vector<Token>(s.tokens().begin(), s.tokens().end()));
  }
  return ReferenceSet(refs.example_id(), refs.source(), std::move(all));
}

Corpus augment_corpus(const Corpus& corpus, const SimilarityProvider& provider,
                      const SelectionConfig& cfg, const ExecutionOptions& opts) {
  std::vector<std::optional<ReferenceSet>> slots(corpus.size());
  // Examples are the parallel unit; each example runs single-threaded.
  parallel_for(corpus.size(), opts, [&](std::size_t n) {
    slots[n] = augment_example(corpus[n], provider, cfg);
  });
  Corpus out;
  out.reserve(corpus.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

ExpandedDataset convert_sample_one(const Corpus& corpus, const EpochSeed& seed) {
  EpochRng rng(seed);
  ExpandedDataset out;
  out.entries.reserve(corpus.size());
  for (const auto& example : corpus) {
    const auto k = static_cast<std::size_t>(rng.below(example.size()));
    out.entries.push_back({example.example_id(), example[k]});
  }
  return out;
}

ExpandedDataset convert_uniform(const Corpus& corpus) {
  ExpandedDataset out;
  for (const auto& example : corpus) {
    for (const auto& ref : example.refs()) out.entries.push_back({example.example_id(), ref});
  }
  return out;
}

ExpandedDataset convert_shuffle(const Corpus& corpus, const EpochSeed& seed) {
  auto out = convert_uniform(corpus);
  EpochRng rng(seed);
  rng.shuffle(std::span(out.entries));
  return out;
}

}  // namespace pseudoref
