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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pseudoref/types.hpp"

namespace pseudoref {

// (cos(a, b) + 1) / 2, clamped to [0, 1]. Throws ValidationError on a
// dimension mismatch, an empty vector, or an all-zero vector.
double normalized_cosine(std::span<const float> a, std::span<const float> b);

// Scores a word of one sentence against a word of another. Implementations
// are read-only after construction and safe to share across threads. Scores
// are symmetric and lie in [0, 1].
class SimilarityProvider {
 public:
  virtual ~SimilarityProvider() = default;

  virtual std::string_view kind() const noexcept = 0;

  // Throws ProviderError if some token of `s` cannot be scored.
  virtual void check_covers(const Sentence& s) const = 0;

  virtual double score(const Sentence& a, std::size_t u, const Sentence& b,
                       std::size_t v) const = 0;
};

// 1.0 for identical surface forms, 0.0 otherwise.
class HardProvider final : public SimilarityProvider {
 public:
  std::string_view kind() const noexcept override { return "hard"; }
  void check_covers(const Sentence&) const override {}
  double score(const Sentence& a, std::size_t u, const Sentence& b,
               std::size_t v) const override;
};

// 1.0 for identical tokens or tokens sharing a group, 0.0 otherwise.
// File format: one group per line, space-separated tokens; '#' starts a
// comment line.
class SynonymTableProvider final : public SimilarityProvider {
 public:
  explicit SynonymTableProvider(const std::vector<std::vector<std::string>>& groups);

  static SynonymTableProvider load(std::istream& in);
  static SynonymTableProvider load_file(const std::filesystem::path& path);

  std::string_view kind() const noexcept override { return "synonyms"; }
  void check_covers(const Sentence&) const override {}
  double score(const Sentence& a, std::size_t u, const Sentence& b,
               std::size_t v) const override;

  bool related(const std::string& x, const std::string& y) const;

 private:
  // token -> sorted ids of the groups that contain it
  std::unordered_map<std::string, std::vector<std::size_t>> membership_;
};

// Context-free word vectors. File format: one token per line followed by d
// space-separated decimal floats. An optional leading "<count> <d>" header
// line is accepted. Out-of-vocabulary tokens are an error.
class StaticVectorProvider final : public SimilarityProvider {
 public:
  explicit StaticVectorProvider(std::unordered_map<std::string, std::vector<float>> table);

  static StaticVectorProvider load(std::istream& in);
  static StaticVectorProvider load_file(const std::filesystem::path& path);

  std::string_view kind() const noexcept override { return "static"; }
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t vocabulary_size() const noexcept { return table_.size(); }

  void check_covers(const Sentence& s) const override;
  double score(const Sentence& a, std::size_t u, const Sentence& b,
               std::size_t v) const override;

 private:
  const std::vector<float>& lookup(const Sentence& s, std::size_t pos) const;

  std::unordered_map<std::string, std::vector<float>> table_;
  std::size_t dim_ = 0;
};

// Per-token contextual vectors keyed by sentence id. File format: one JSON
// object per line,
//   {"sentence_id":"e1:0","tokens":["a","b"],"vectors":[[...],[...]]}
// The token sequence must match the corpus sentence position by position.
class ContextualVectorProvider final : public SimilarityProvider {
 public:
  struct Record {
    std::vector<std::string> tokens;
    std::vector<std::vector<float>> vectors;
  };

  explicit ContextualVectorProvider(std::unordered_map<std::string, Record> records);

  static ContextualVectorProvider load(std::istream& in);
  static ContextualVectorProvider load_file(const std::filesystem::path& path);

  std::string_view kind() const noexcept override { return "contextual"; }
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t sentence_count() const noexcept { return records_.size(); }

  void check_covers(const Sentence& s) const override;
  double score(const Sentence& a, std::size_t u, const Sentence& b,
               std::size_t v) const override;

 private:
  const Record& record_for(const Sentence& s) const;

  std::unordered_map<std::string, Record> records_;
  std::size_t dim_ = 0;
};

// raw(u, v) = provider score of (a[u], b[v]); score = raw - penalty.
SubstitutionMatrix build_matrix(const Sentence& a, const Sentence& b,
                                const SimilarityProvider& provider, double penalty);

}  // namespace pseudoref
