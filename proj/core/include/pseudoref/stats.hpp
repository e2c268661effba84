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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pseudoref/expand.hpp"
#include "pseudoref/parallel.hpp"
#include "pseudoref/similarity.hpp"
#include "pseudoref/types.hpp"

namespace pseudoref {

inline constexpr std::size_t kStatsTopN = 50;

struct StatsRow {
  std::string example_id;
  double mean_ref_length = 0.0;
  std::uint64_t path_count_total = 0;  // count_paths of the final lattice
  bool path_count_saturated = false;
  std::size_t pseudo_count = 0;           // distinct non-gold strings (up to cap)
  std::optional<double> mean_bleu_top50;  // empty when there are no pseudo-refs
  double final_penalty = 0.0;
  // PathCount::paths minus distinct enumerated strings; empty when enumeration
  // was truncated or the count saturated.
  std::optional<std::int64_t> string_collision_delta;
  bool truncated = false;
  std::string error;  // non-empty when the example failed; other fields unset
};

// One row per example, in corpus order. Per-example failures are recorded in
// StatsRow::error and do not stop the run.
std::vector<StatsRow> corpus_stats(const Corpus& corpus, const SimilarityProvider& provider,
                                   const SelectionConfig& cfg, const ExecutionOptions& opts = {});

// Header:
// example_id,mean_ref_length,path_count_total,pseudo_count,mean_bleu_top50,
// final_penalty,string_collision_delta,truncated,error
void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows);

}  // namespace pseudoref
