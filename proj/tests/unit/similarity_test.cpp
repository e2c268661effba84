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

#include <sstream>
#include <vector>

#include "pseudoref/error.hpp"
#include "pseudoref/similarity.hpp"
#include "support/fixtures.hpp"

namespace pr = pseudoref;
namespace pt = pseudoref::testing;

namespace {
pr::Sentence S(const std::string& id, const std::string& text) {
  return pr::Sentence::parse(id, text);
}
}  // namespace

TEST(NormalizedCosine, Range) {
  const std::vector<float> a{1, 0};
  const std::vector<float> b{0, 1};
  const std::vector<float> c{-2, 0};
  EXPECT_DOUBLE_EQ(pr::normalized_cosine(a, a), 1.0);
  EXPECT_DOUBLE_EQ(pr::normalized_cosine(a, b), 0.5);
  EXPECT_DOUBLE_EQ(pr::normalized_cosine(a, c), 0.0);
}

TEST(NormalizedCosine, Errors) {
  const std::vector<float> a{1, 0};
  const std::vector<float> three{1, 0, 0};
  const std::vector<float> zero{0, 0};
  const std::vector<float> empty;
  EXPECT_THROW(pr::normalized_cosine(a, three), pr::ValidationError);
  EXPECT_THROW(pr::normalized_cosine(a, zero), pr::ValidationError);
  EXPECT_THROW(pr::normalized_cosine(empty, empty), pr::ValidationError);
}

TEST(HardProvider, Identity) {
  const pr::HardProvider h;
  const auto a = S("a", "x y");
  const auto b = S("b", "y X");
  EXPECT_EQ(h.score(a, 1, b, 0), 1.0);
  EXPECT_EQ(h.score(a, 0, b, 1), 0.0);
}

TEST(SynonymTable, GroupsAndComments) {
  std::istringstream in("# comment\nbig large\n\nlarge huge\n");
  const auto syn = pr::SynonymTableProvider::load(in);
  EXPECT_TRUE(syn.related("big", "large"));
  EXPECT_TRUE(syn.related("huge", "large"));
  EXPECT_FALSE(syn.related("big", "huge"));  // no transitive closure
  EXPECT_TRUE(syn.related("cat", "cat"));
  const auto a = S("a", "big cat");
  const auto b = S("b", "large dog");
  EXPECT_EQ(syn.score(a, 0, b, 0), 1.0);
  EXPECT_EQ(syn.score(a, 1, b, 1), 0.0);
}

TEST(StaticVectors, LoadWithHeader) {
  std::istringstream in("2 2\na 1 0\nb 0 1\n");
  const auto v = pr::StaticVectorProvider::load(in);
  EXPECT_EQ(v.dimension(), 2u);
  EXPECT_EQ(v.vocabulary_size(), 2u);
  const auto s = S("s", "a b");
  EXPECT_DOUBLE_EQ(v.score(s, 0, s, 1), 0.5);
  EXPECT_DOUBLE_EQ(v.score(s, 0, s, 0), 1.0);
}

TEST(StaticVectors, LoadErrorsNameTheLine) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      pr::StaticVectorProvider::load(in);
    } catch (const pr::DataError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("a 1 0\nb 0 1 2\n"), 2u);
  EXPECT_EQ(line_of("a 1 0\nb 0 zz\n"), 2u);
  EXPECT_EQ(line_of("a 1 0\nb 0 0\n"), 2u);
  EXPECT_EQ(line_of("a 1 0\na 0 1\n"), 2u);
}

TEST(StaticVectors, OutOfVocabularyNamesTokenAndSentence) {
  std::istringstream in("a 1 0\n");
  const auto v = pr::StaticVectorProvider::load(in);
  try {
    v.check_covers(S("ex:3", "a zebra"));
    FAIL();
  } catch (const pr::ProviderError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("zebra"), std::string::npos);
    EXPECT_NE(what.find("ex:3"), std::string::npos);
  }
}

TEST(ContextualVectors, ElephantFixture) {
  const auto ctx = pr::ContextualVectorProvider::load_file(pt::data_path("elephant_context.jsonl"));
  const auto refs = pt::elephant();
  EXPECT_EQ(ctx.sentence_count(), 2u);
  EXPECT_NO_THROW(ctx.check_covers(refs[0]));
  EXPECT_DOUBLE_EQ(ctx.score(refs[0], 0, refs[1], 0), 1.0);  // Two / Two
  EXPECT_DOUBLE_EQ(ctx.score(refs[0], 6, refs[1], 3), 0.0);  // to / to
  EXPECT_DOUBLE_EQ(ctx.score(refs[0], 2, refs[1], 2), 0.5);  // in / try
}

TEST(ContextualVectors, TokenMismatchAndUnknownSentence) {
  std::istringstream in(R"({"sentence_id":"e:0","tokens":["a","b"],"vectors":[[1,0],[0,1]]})");
  const auto ctx = pr::ContextualVectorProvider::load(in);
  EXPECT_THROW(ctx.check_covers(S("e:0", "a c")), pr::ProviderError);
  EXPECT_THROW(ctx.check_covers(S("e:0", "a")), pr::ProviderError);
  EXPECT_THROW(ctx.check_covers(S("e:1", "a b")), pr::ProviderError);
  EXPECT_NO_THROW(ctx.check_covers(S("e:0", "a b")));
}

TEST(ContextualVectors, MalformedRecords) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      pr::ContextualVectorProvider::load(in);
    } catch (const pr::DataError& e) {
      return e.line();
    }
    return 0;
  };
  const std::string ok = R"({"sentence_id":"e:0","tokens":["a"],"vectors":[[1,0]]})";
  EXPECT_EQ(line_of(ok + "\n" + R"({"sentence_id":"e:1","tokens":["a"],"vectors":[[1,0,0]]})"),
            2u);
  EXPECT_EQ(line_of(ok + "\n" + R"({"sentence_id":"e:1","tokens":["a","b"],"vectors":[[1,0]]})"),
            2u);
  EXPECT_EQ(line_of(ok + "\n" + ok), 2u);
  EXPECT_EQ(line_of("{"), 1u);
}

TEST(BuildMatrix, UsesProviderAndPenalty) {
  const pr::HardProvider h;
  const auto m = pr::build_matrix(S("a", "x y"), S("b", "y"), h, 0.5);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 1u);
  EXPECT_DOUBLE_EQ(m.score(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(m.score(0, 0), -0.5);
  EXPECT_THROW(pr::build_matrix(S("a", "x"), S("b", "y"), h, 1.5), pr::ValidationError);
}
