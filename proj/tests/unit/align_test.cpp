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

#include <gtest/gtest.h>

#include <random>

#include "pseudoref/align.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace pr = pseudoref;
namespace pt = pseudoref::testing;

TEST(DpAlign, MatchesBruteForceOnRandomMatrices) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const auto m = pt::random_matrix(rng, 5, 0.5);
    const auto a = pr::dp_align(m);
    EXPECT_EQ(a.score(), pt::brute_force_alignment(m).best) << "case " << t;
    EXPECT_TRUE(a.consistent_with(m));
  }
}

TEST(DpAlign, TiedMatricesStillOptimal) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const auto m = pt::random_tied_matrix(rng, 5, 0.5);
    EXPECT_EQ(pr::dp_align(m).score(), pt::brute_force_alignment(m).best) << "case " << t;
  }
}

TEST(DpAlign, SymmetricUnderTransposition) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto m = pt::random_matrix(rng, 5, 0.3);
    const auto a = pr::dp_align(m);
    const auto b = pr::dp_align(m.transposed());
    EXPECT_DOUBLE_EQ(a.score(), b.score());
    if (pt::brute_force_alignment(m).argmax_count == 1) {
      EXPECT_TRUE(std::ranges::equal(a.transposed().pairs(), b.pairs())) << "case " << t;
    }
  }
}

TEST(DpAlign, ZeroScoreDiagonalIsTaken) {
  const pr::SubstitutionMatrix m(1, 1, {0.5}, 0.5);
  const auto a = pr::dp_align(m);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.score(), 0.0);
}

TEST(DpAlign, NegativeCellsNeverAligned) {
  const pr::SubstitutionMatrix m(2, 2, {0.1, 0.2, 0.3, 0.4}, 0.5);
  const auto a = pr::dp_align(m);
  EXPECT_TRUE(a.empty());
  EXPECT_EQ(a.score(), 0.0);
}

TEST(DpAlign, CrossingMatchesResolvedToBest) {
  // rows "a b", cols "b a": only one of the two identical pairs can be kept.
  const pr::SubstitutionMatrix m(2, 2, {0, 1, 1, 0}, 0.5);
  const auto a = pr::dp_align(m);
  EXPECT_EQ(a.size(), 1u);
  EXPECT_DOUBLE_EQ(a.score(), 0.5);
}

TEST(DpTable, BordersZeroAndMoves) {
  const pr::SubstitutionMatrix m(2, 2, {1, 0, 0, 1}, 0.5);
  const pr::DpTable t(m);
  for (std::size_t u = 0; u <= 2; ++u) EXPECT_EQ(t.opt(u, 0), 0.0);
  for (std::size_t v = 0; v <= 2; ++v) EXPECT_EQ(t.opt(0, v), 0.0);
  EXPECT_DOUBLE_EQ(t.opt(2, 2), 1.0);
  EXPECT_EQ(t.move(2, 2), pr::Move::kDiag);
  EXPECT_EQ(t.move(1, 2), pr::Move::kLeft);
  EXPECT_EQ(t.move(2, 1), pr::Move::kUp);
}

TEST(PairScores, IndonesiaOrder) {
  const auto refs = pt::indonesia();
  const pr::HardProvider h;
  const auto ps = pr::pair_scores(refs, h, 0.5);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0].i, 0u);
  EXPECT_EQ(ps[0].j, 1u);
  EXPECT_DOUBLE_EQ(ps[0].score(), 2.0);
  EXPECT_EQ(ps[1].i, 0u);
  EXPECT_EQ(ps[1].j, 2u);
  EXPECT_DOUBLE_EQ(ps[1].score(), 2.0);
  EXPECT_EQ(ps[2].i, 1u);
  EXPECT_EQ(ps[2].j, 2u);
  EXPECT_DOUBLE_EQ(ps[2].score(), 1.5);
}

TEST(PairScores, IndependentOfThreadCount) {
  std::mt19937_64 rng(4);
  const pr::HardProvider h;
  for (int t = 0; t < 20; ++t) {
    const auto refs = pt::random_refs(rng, "e", 6, 8, 5);
    const auto a = pr::pair_scores(refs, h, 0.5, {1});
    const auto b = pr::pair_scores(refs, h, 0.5, {4});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a[k].i, b[k].i);
      EXPECT_EQ(a[k].j, b[k].j);
      EXPECT_TRUE(std::ranges::equal(a[k].alignment.pairs(), b[k].alignment.pairs()));
    }
  }
}
