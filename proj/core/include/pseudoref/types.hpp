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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pseudoref {

// A single surface word. Non-empty, no ASCII whitespace, compared by exact
// (case-sensitive) string equality.
class Token {
 public:
  explicit Token(std::string text);

  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const Token&, const Token&) = default;
  friend auto operator<=>(const Token&, const Token&) = default;

 private:
  std::string text_;
};

// Splits on ASCII whitespace only. No case folding or other normalization.
std::vector<Token> tokenize(std::string_view text);

// Joins token texts with single spaces.
std::string join(std::span<const Token> tokens);

class Sentence {
 public:
  Sentence(std::string id, std::vector<Token> tokens);

  static Sentence parse(std::string id, std::string_view text);

  const std::string& id() const noexcept { return id_; }
  std::span<const Token> tokens() const noexcept { return tokens_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }
  std::string text() const { return join(tokens_); }

  // Token-level equality; ids are ignored.
  bool same_words(const Sentence& other) const { return tokens_ == other.tokens_; }

 private:
  std::string id_;
  std::vector<Token> tokens_;
};

// One training example: an optional source (sentence or image id) and its K
// gold references. Reference k gets the sentence id "<example_id>:<k>".
class ReferenceSet {
 public:
  ReferenceSet(std::string example_id, std::optional<std::string> source,
               std::vector<Sentence> refs);

  // Builds references from whitespace-tokenized strings, assigning ids.
  static ReferenceSet from_strings(std::string example_id,
                                   std::optional<std::string> source,
                                   const std::vector<std::string>& refs);

  static std::string sentence_id(std::string_view example_id, std::size_t k);

  const std::string& example_id() const noexcept { return example_id_; }
  const std::optional<std::string>& source() const noexcept { return source_; }
  std::span<const Sentence> refs() const noexcept { return refs_; }
  std::size_t size() const noexcept { return refs_.size(); }
  const Sentence& operator[](std::size_t k) const { return refs_[k]; }

 private:
  std::string example_id_;
  std::optional<std::string> source_;
  std::vector<Sentence> refs_;
};

using Corpus = std::vector<ReferenceSet>;

// Throws ValidationError when two examples share an id.
void check_unique_ids(const Corpus& corpus);

// Pairwise word-similarity scores for one sentence pair. raw(u, v) is in
// [0, 1]; score(u, v) == raw(u, v) - penalty.
class SubstitutionMatrix {
 public:
  SubstitutionMatrix(std::size_t rows, std::size_t cols, std::vector<double> raw,
                     double penalty);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double penalty() const noexcept { return penalty_; }
  double raw(std::size_t u, std::size_t v) const { return raw_[u * cols_ + v]; }
  double score(std::size_t u, std::size_t v) const { return scores_[u * cols_ + v]; }
  std::span<const double> raw_scores() const noexcept { return raw_; }
  std::span<const double> scores() const noexcept { return scores_; }

  SubstitutionMatrix transposed() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  double penalty_;
  std::vector<double> raw_;
  std::vector<double> scores_;
};

struct AlignedPair {
  std::size_t row;
  std::size_t col;

  friend bool operator==(const AlignedPair&, const AlignedPair&) = default;
  friend auto operator<=>(const AlignedPair&, const AlignedPair&) = default;
};

// A monotone word alignment: rows and columns both strictly increase.
class Alignment {
 public:
  Alignment() = default;
  Alignment(std::vector<AlignedPair> pairs, double score);

  std::span<const AlignedPair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  double score() const noexcept { return score_; }

  Alignment transposed() const;

  // True when every pair clears the penalty and score() equals the sum of the
  // penalized cell scores (accumulated in pair order).
  bool consistent_with(const SubstitutionMatrix& m) const;

 private:
  std::vector<AlignedPair> pairs_;
  double score_ = 0.0;
};

// A single-reference dataset. Entry order is significant.
struct ExpandedDataset {
  struct Entry {
    std::string example_id;
    Sentence ref;
  };
  std::vector<Entry> entries;

  std::size_t size() const noexcept { return entries.size(); }
};

}  // namespace pseudoref
