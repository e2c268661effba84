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

#include "pseudoref/error.hpp"
#include "pseudoref/types.hpp"

namespace pr = pseudoref;

TEST(Token, RejectsEmptyAndWhitespace) {
  EXPECT_THROW(pr::Token(""), pr::ValidationError);
  EXPECT_THROW(pr::Token("a b"), pr::ValidationError);
  EXPECT_THROW(pr::Token("a\tb"), pr::ValidationError);
  EXPECT_EQ(pr::Token("Indonesia").text(), "Indonesia");
}

TEST(Token, CaseSensitive) {
  EXPECT_NE(pr::Token("Two"), pr::Token("two"));
  EXPECT_LT(pr::Token("Two"), pr::Token("two"));
}

TEST(Tokenize, SplitsOnAsciiWhitespaceOnly) {
  const auto t = pr::tokenize("  a\tb \n c  ");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(pr::join(t), "a b c");
  EXPECT_TRUE(pr::tokenize("   ").empty());
}

TEST(Sentence, RequiresAtLeastOneToken) {
  EXPECT_THROW(pr::Sentence::parse("s", " "), pr::ValidationError);
  const auto s = pr::Sentence::parse("s", "a b");
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.text(), "a b");
  EXPECT_EQ(s[1].text(), "b");
}

TEST(Sentence, SameWordsIgnoresIds) {
  EXPECT_TRUE(pr::Sentence::parse("x", "a b").same_words(pr::Sentence::parse("y", "a  b")));
  EXPECT_FALSE(pr::Sentence::parse("x", "a b").same_words(pr::Sentence::parse("x", "a c")));
}

TEST(ReferenceSet, AssignsSentenceIds) {
  const auto r = pr::ReferenceSet::from_strings("e7", "src", {"a b", "c"});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].id(), "e7:0");
  EXPECT_EQ(r[1].id(), "e7:1");
  EXPECT_EQ(r.source(), "src");
  EXPECT_EQ(pr::ReferenceSet::sentence_id("e", 12), "e:12");
}

TEST(ReferenceSet, RequiresReferences) {
  EXPECT_THROW(pr::ReferenceSet::from_strings("e", std::nullopt, {}), pr::ValidationError);
  EXPECT_THROW(pr::ReferenceSet::from_strings("e", std::nullopt, {""}), pr::ValidationError);
}

TEST(Corpus, UniqueIds) {
  pr::Corpus c{pr::ReferenceSet::from_strings("a", std::nullopt, {"x"}),
               pr::ReferenceSet::from_strings("a", std::nullopt, {"y"})};
  EXPECT_THROW(pr::check_unique_ids(c), pr::ValidationError);
  c.pop_back();
  EXPECT_NO_THROW(pr::check_unique_ids(c));
}

TEST(SubstitutionMatrix, ScoresArePenalized) {
  const pr::SubstitutionMatrix m(2, 3, {1, 0, 0.5, 0.25, 1, 0}, 0.5);
  EXPECT_DOUBLE_EQ(m.score(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(m.score(0, 1), -0.5);
  EXPECT_DOUBLE_EQ(m.raw(1, 0), 0.25);
  const auto t = m.transposed();
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t.cols(), 2u);
  EXPECT_DOUBLE_EQ(t.raw(0, 1), 0.25);
}

TEST(SubstitutionMatrix, ValidatesInputs) {
  EXPECT_THROW(pr::SubstitutionMatrix(1, 2, {0.5}, 0.5), pr::ValidationError);
  EXPECT_THROW(pr::SubstitutionMatrix(1, 1, {1.5}, 0.5), pr::ValidationError);
  EXPECT_THROW(pr::SubstitutionMatrix(1, 1, {0.5}, -0.1), pr::ValidationError);
  EXPECT_THROW(pr::SubstitutionMatrix(1, 1, {0.5}, 1.1), pr::ValidationError);
}

TEST(Alignment, MustBeStrictlyMonotone) {
  EXPECT_THROW(pr::Alignment({{0, 1}, {0, 2}}, 0), pr::ValidationError);
  EXPECT_THROW(pr::Alignment({{1, 1}, {2, 0}}, 0), pr::ValidationError);
  const pr::Alignment a({{0, 1}, {2, 3}}, 1.0);
  const auto t = a.transposed();
  EXPECT_EQ(t.pairs()[1], (pr::AlignedPair{3, 2}));
}

TEST(Alignment, ConsistencyWithMatrix) {
  const pr::SubstitutionMatrix m(2, 2, {1, 0, 0, 1}, 0.5);
  EXPECT_TRUE(pr::Alignment({{0, 0}, {1, 1}}, 1.0).consistent_with(m));
  EXPECT_FALSE(pr::Alignment({{0, 0}, {1, 1}}, 0.9).consistent_with(m));
  EXPECT_FALSE(pr::Alignment({{0, 1}}, -0.5).consistent_with(m));
}
