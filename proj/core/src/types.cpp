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

#include "pseudoref/types.hpp"

#include <algorithm>
#include <unordered_set>

#include "pseudoref/error.hpp"

namespace pseudoref {
namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

Token::Token(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw ValidationError("token is empty");
  if (std::any_of(text_.begin(), text_.end(), is_ascii_space)) {
    throw ValidationError("token contains whitespace: \"" + text_ + "\"");
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_ascii_space(text[j])) ++j;
    if (j > i) tokens.emplace_back(std::string(text.substr(i, j - i)));
    i = j;
  }
  return tokens;
}

std::string join(std::span<const Token> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.text();
  }
  return out;
}

Sentence::Sentence(std::string id, std::vector<Token> tokens)
    : id_(std::move(id)), tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw ValidationError("sentence \"" + id_ + "\" has no tokens");
}

Sentence Sentence::parse(std::string id, std::string_view text) {
  return Sentence(std::move(id), tokenize(text));
}

ReferenceSet::ReferenceSet(std::string example_id, std::optional<std::string> source,
                           std::vector<Sentence> refs)
    : example_id_(std::move(example_id)), source_(std::move(source)), refs_(std::move(refs)) {
  if (refs_.empty()) {
    throw ValidationError("example \"" + example_id_ + "\" has no references");
  }
}

ReferenceSet ReferenceSet::from_strings(std::string example_id,
                                        std::optional<std::string> source,
                                        const std::vector<std::string>& refs) {
  std::vector<Sentence> sentences;
  sentences.reserve(refs.size());
  for (std::size_t k = 0; k < refs.size(); ++k) {
    sentences.push_back(Sentence::parse(sentence_id(example_id, k), refs[k]));
  }
  return ReferenceSet(std::move(example_id), std::move(source), std::move(sentences));
}

std::string ReferenceSet::sentence_id(std::string_view example_id, std::size_t k) {
  std::string id(example_id);
  id += ':';
  id += std::to_string(k);
  return id;
}

void check_unique_ids(const Corpus& corpus) {
  std::unordered_set<std::string_view> seen;
  for (const auto& example : corpus) {
    if (!seen.insert(example.example_id()).second) {
      throw ValidationError("duplicate example_id \"" + example.example_id() + "\"");
    }
  }
}

SubstitutionMatrix::SubstitutionMatrix(std::size_t rows, std::size_t cols,
                                       std::vector<double> raw, double penalty)
    : rows_(rows), cols_(cols), penalty_(penalty), raw_(std::move(raw)) {
  if (rows_ == 0 || cols_ == 0) throw ValidationError("substitution matrix has a zero dimension");
  if (raw_.size() != rows_ * cols_) {
    throw ValidationError("substitution matrix size does not match its dimensions");
  }
  if (!(penalty_ >= 0.0 && penalty_ <= 1.0)) {
    throw ValidationError("penalty must lie in [0, 1], got " + std::to_string(penalty_));
  }
  scores_.resize(raw_.size());
  for (std::size_t k = 0; k < raw_.size(); ++k) {
    if (!(raw_[k] >= 0.0 && raw_[k] <= 1.0)) {
      throw ValidationError("similarity score outside [0, 1]: " + std::to_string(raw_[k]));
    }
    scores_[k] = raw_[k] - penalty_;
  }
}

SubstitutionMatrix SubstitutionMatrix::transposed() const {
  std::vector<double> t(raw_.size());
  for (std::size_t u = 0; u < rows_; ++u) {
    for (std::size_t v = 0; v < cols_; ++v) t[v * rows_ + u] = raw(u, v);
  }
  return SubstitutionMatrix(cols_, rows_, std::move(t), penalty_);
}

Alignment::Alignment(std::vector<AlignedPair> pairs, double score)
    : pairs_(std::move(pairs)), score_(score) {
  for (std::size_t k = 1; k < pairs_.size(); ++k) {
    if (pairs_[k].row <= pairs_[k - 1].row || pairs_[k].col <= pairs_[k - 1].col) {
      throw ValidationError("alignment is not strictly monotone");
    }
  }
}

Alignment Alignment::transposed() const {
  std::vector<AlignedPair> t;
  t.reserve(pairs_.size());
  for (const auto& p : pairs_) t.push_back({p.col, p.row});
  return Alignment(std::move(t), score_);
}

bool Alignment::consistent_with(const SubstitutionMatrix& m) const {
  double sum = 0.0;
  for (const auto& p : pairs_) {
    if (p.row >= m.rows() || p.col >= m.cols()) return false;
    if (m.raw(p.row, p.col) < m.penalty()) return false;
    sum += m.score(p.row, p.col);
  }
  return sum == score_;
}

}  // namespace pseudoref
