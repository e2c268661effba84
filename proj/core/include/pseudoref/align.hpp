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
#include <vector>

#include "pseudoref/parallel.hpp"
#include "pseudoref/similarity.hpp"
#include "pseudoref/types.hpp"

namespace pseudoref {

// Back-pointer of a DP cell. kUp consumes a row word (gap in the column
// sentence), kLeft consumes a column word, kDiag aligns both.
enum class Move : std::uint8_t { kNone, kDiag, kUp, kLeft };

// (rows+1) x (cols+1) table of
//   opt(u, v) = max(opt(u-1, v-1) + score(u-1, v-1), opt(u-1, v), opt(u, v-1))
// with a zero first row and column. Gaps are free.
class DpTable {
 public:
  explicit DpTable(const SubstitutionMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double opt(std::size_t u, std::size_t v) const { return opt_[u * (cols_ + 1) + v]; }
  Move move(std::size_t u, std::size_t v) const { return move_[u * (cols_ + 1) + v]; }

  // Walks back-pointers from (rows, cols) to the border.
  Alignment traceback() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> opt_;
  std::vector<Move> move_;
};

// Ties prefer diag, then up, then left; a diagonal whose penalized score is
// negative is never taken. Pairs with raw == penalty (score 0) are aligned.
Alignment dp_align(const SubstitutionMatrix& m);

struct PairScore {
  std::size_t i;
  std::size_t j;
  Alignment alignment;  // rows index refs[i], columns index refs[j]

  double score() const noexcept { return alignment.score(); }
};

// Every unordered pair i < j, sorted by descending score, ties by (i, j).
// Output does not depend on opts.threads.
std::vector<PairScore> pair_scores(const ReferenceSet& refs, const SimilarityProvider& provider,
                                   double penalty, const ExecutionOptions& opts = {});

}  // namespace pseudoref
