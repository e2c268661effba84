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

#include "pseudoref/align.hpp"

#include <algorithm>
#include <tuple>

#include "pseudoref/error.hpp"

namespace pseudoref {

DpTable::DpTable(const SubstitutionMatrix& m)
    : rows_(m.rows()),
      cols_(m.cols()),
      opt_((rows_ + 1) * (cols_ + 1), 0.0),
      move_((rows_ + 1) * (cols_ + 1), Move::kNone) {
  const std::size_t stride = cols_ + 1;
  for (std::size_t u = 1; u <= rows_; ++u) move_[u * stride] = Move::kUp;
  for (std::size_t v = 1; v <= cols_; ++v) move_[v] = Move::kLeft;

  for (std::size_t u = 1; u <= rows_; ++u) {
    for (std::size_t v = 1; v <= cols_; ++v) {
      const double cell = m.score(u - 1, v - 1);
      const double diag = opt_[(u - 1) * stride + (v - 1)] + cell;
      const double up = opt_[(u - 1) * stride + v];
      const double left = opt_[u * stride + (v - 1)];
      const double best = std::max({diag, up, left});
      opt_[u * stride + v] = best;
      if (cell >= 0.0 && diag == best) {
        move_[u * stride + v] = Move::kDiag;
      } else if (up == best) {
        move_[u * stride + v] = Move::kUp;
      } else {
        move_[u * stride + v] = Move::kLeft;
      }
    }
  }
}

Alignment DpTable::traceback() const {
  std::vector<AlignedPair> pairs;
  std::size_t u = rows_, v = cols_;
  while (u > 0 && v > 0) {
    switch (move(u, v)) {
      case Move::kDiag:
        pairs.push_back({u - 1, v - 1});
        --u;
        --v;
        break;
      case Move::kUp:
        --u;
        break;
      case Move::kLeft:
        --v;
        break;
      case Move::kNone:
        throw Error("corrupt DP table: missing back-pointer");
    }
  }
  std::reverse(pairs.begin(), pairs.end());
  return Alignment(std::move(pairs), opt(rows_, cols_));
}

Alignment dp_align(const SubstitutionMatrix& m) { return DpTable(m).traceback(); }

std::vector<PairScore> pair_scores(const ReferenceSet& refs, const SimilarityProvider& provider,
                                   double penalty, const ExecutionOptions& opts) {
  const std::size_t k = refs.size();
  std::vector<PairScore> out;
  out.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) out.push_back({i, j, {}});
  }
  parallel_for(out.size(), opts, [&](std::size_t n) {
    auto& ps = out[n];
    ps.alignment = dp_align(build_matrix(refs[ps.i], refs[ps.j], provider, penalty));
  });
  std::stable_sort(out.begin(), out.end(), [](const PairScore& a, const PairScore& b) {
    if (a.score() != b.score()) return a.score() > b.score();
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  return out;
}

}  // namespace pseudoref
