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

#include <cmath>
#include <vector>

#include "pseudoref/bleu.hpp"
#include "pseudoref/error.hpp"

namespace pr = pseudoref;

namespace {
pr::Sentence S(const std::string& text) { return pr::Sentence::parse("s", text); }

double bleu(const std::string& c, const std::vector<std::string>& refs) {
  std::vector<pr::Sentence> r;
  for (const auto& t : refs) r.push_back(S(t));
  return pr::sentence_bleu(S(c), r).value;
}
}  // namespace

TEST(Bleu, IdentityIsExactly100) {
  EXPECT_EQ(bleu("the cat sat on the mat", {"the cat sat on the mat"}), 100.0);
  EXPECT_EQ(bleu("a b", {"a b"}), 100.0);
}

TEST(Bleu, DisjointIsZero) { EXPECT_EQ(bleu("a b c", {"d e f"}), 0.0); }

TEST(Bleu, HandComputedFixture) {
  // precisions 4/5, 3/4, 2/3, 1/2; BP 1
  EXPECT_NEAR(bleu("a b c d e", {"a b c d f"}), 100.0 * std::pow(0.2, 0.25), 1e-9);
  EXPECT_NEAR(bleu("a b c d e", {"a b c d f"}), 66.87, 0.01);
}

TEST(Bleu, Smoothing) {
  // No matching bigram: p2 = 1 / (2 * 3).
  const auto s = pr::sentence_bleu(S("a x b y"), std::vector<pr::Sentence>{S("a b x y z")});
  EXPECT_DOUBLE_EQ(s.precisions[0], 1.0);
  EXPECT_DOUBLE_EQ(s.precisions[1], 1.0 / 6.0);
}

TEST(Bleu, ClippingPerReference) {
  const auto s = pr::sentence_bleu(S("the the the"), std::vector<pr::Sentence>{S("the cat"), S("the the dog")});
  EXPECT_DOUBLE_EQ(s.precisions[0], 2.0 / 3.0);
}

TEST(Bleu, BrevityPenaltyClosestLength) {
  const auto s = pr::sentence_bleu(S("a b"), std::vector<pr::Sentence>{S("a b c d"), S("a b c d e f g h")});
  EXPECT_DOUBLE_EQ(s.brevity_penalty, std::exp(1.0 - 4.0 / 2.0));
  const auto longer = pr::sentence_bleu(S("a b c d e"), std::vector<pr::Sentence>{S("a b c")});
  EXPECT_DOUBLE_EQ(longer.brevity_penalty, 1.0);
}

TEST(Bleu, ShortCandidateUsesEffectiveOrder) {
  const auto s = pr::sentence_bleu(S("a b"), std::vector<pr::Sentence>{S("a b")});
  EXPECT_EQ(s.effective_order, 2);
  EXPECT_EQ(s.value, 100.0);
}

TEST(Bleu, MultiReferenceReaches100) {
  EXPECT_EQ(bleu("a b c d e f g", {"a b c d e", "c d e f g"}), 100.0);
}

TEST(Bleu, EmptyReferencesRejected) {
  const std::vector<pr::Sentence> none;
  EXPECT_THROW(pr::sentence_bleu(S("a"), none), pr::ValidationError);
}

TEST(Bleu, EmptyCandidate) {
  const std::vector<pr::Token> empty;
  const auto s = pr::sentence_bleu(empty, std::vector<pr::Sentence>{S("a")});
  EXPECT_EQ(s.value, 0.0);
  EXPECT_EQ(s.brevity_penalty, 0.0);
}

TEST(Bleu, AddingReferenceNeverLowersScore) {
  // Closest length would move from 3 to 6 here.
  const double before = bleu("a b c d e", {"a b c"});
  const double after = bleu("a b c d e", {"a b c", "a b c d e f"});
  EXPECT_GE(after, before);
}
